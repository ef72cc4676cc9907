#include "dynfeat/demo.hpp"

#include <charconv>
#include <numeric>

#include "dynfeat/assortativity.hpp"
#include "dynfeat/spectral.hpp"
#include "dynfeat/walk_operator.hpp"

namespace dynfeat {

std::vector<TopologyCurve> topology_curves(std::size_t n, int t_max, double p,
                                           std::uint64_t seed) {
  std::vector<int> ts(static_cast<std::size_t>(t_max) + 1);
  std::iota(ts.begin(), ts.end(), 0);
  const TimeGrid grid(ts);
  std::vector<TopologyCurve> out;
  for (auto kind : {Topology::communities3, Topology::ring, Topology::clique,
                    Topology::erdos_renyi, Topology::star, Topology::regular}) {
    const WalkOperator walk(generate_topology(kind, n, p, seed));
    const auto eig = second_left_eigenvector(walk);
    out.push_back({kind, eig.eigenvalue, numeric_assortativity(walk, eig.vector, grid)});
  }
  return out;
}

std::string format_curves_csv(const std::vector<TopologyCurve>& curves) {
  std::string out = "t";
  for (const auto& c : curves) out += "," + std::string(to_string(c.kind));
  out += '\n';
  const std::size_t steps = curves.empty() ? 0 : curves.front().values.size();
  char buf[32];
  for (std::size_t t = 0; t < steps; ++t) {
    out += std::to_string(t);
    for (const auto& c : curves) {
      const auto res = std::to_chars(buf, buf + sizeof buf, c.values[t], std::chars_format::general, 17);
      out += ',';
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dynfeat
