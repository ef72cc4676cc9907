#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynfeat/generators.hpp"

namespace dynfeat {

/// u_w(t) for t = 0..t_max where w is the graph's second left eigenvector.
struct TopologyCurve {
  Topology kind;
  double eigenvalue = 0.0;
  std::vector<double> values;
};

/// One curve per topology, in Topology order.
std::vector<TopologyCurve> topology_curves(std::size_t n = 30, int t_max = 10, double p = 0.4,
                                           std::uint64_t seed = 0);

/// Wide CSV: `t,<topology>,...` with one row per time step.
std::string format_curves_csv(const std::vector<TopologyCurve>& curves);

}  // namespace dynfeat
