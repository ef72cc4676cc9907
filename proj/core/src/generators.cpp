#include "dynfeat/generators.hpp"

#include <array>
#include <string>
#include <vector>

#include "dynfeat/errors.hpp"
#include "dynfeat/random.hpp"

namespace dynfeat {

namespace {

constexpr std::array<std::pair<Topology, std::string_view>, 6> kTopologyNames{{
    {Topology::communities3, "communities3"},
    {Topology::ring, "ring"},
    {Topology::clique, "clique"},
    {Topology::erdos_renyi, "erdos_renyi"},
    {Topology::star, "star"},
    {Topology::regular, "regular"},
}};

void add_clique(std::vector<Edge>& edges, std::size_t first, std::size_t size) {
  for (std::size_t i = first; i < first + size; ++i) {
    for (std::size_t j = i + 1; j < first + size; ++j) edges.push_back({i, j, 1.0});
  }
}

Graph erdos_renyi_once(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({i, j, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::string_view to_string(Topology kind) {
  for (const auto& [k, name] : kTopologyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<Topology> parse_topology(std::string_view name) {
  for (const auto& [k, n] : kTopologyNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Graph generate_topology(Topology kind, std::size_t n, double p, std::uint64_t seed) {
  if (n < 3) throw ArgumentError("topology generators need n >= 3");
  std::vector<Edge> edges;
  switch (kind) {
    case Topology::communities3: {
      if (n % 3 != 0) throw ArgumentError("communities3 needs n divisible by 3");
      const auto size = n / 3;
      for (std::size_t c = 0; c < 3; ++c) add_clique(edges, c * size, size);
      edges.push_back({size - 1, size, 1.0});
      edges.push_back({2 * size - 1, 2 * size, 1.0});
      break;
    }
    case Topology::ring:
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
      break;
    case Topology::clique:
      add_clique(edges, 0, n);
      break;
    case Topology::star:
      for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
      break;
    case Topology::regular:
      if (n < 5) throw ArgumentError("degree-4 circulant needs n >= 5");
      for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
        edges.push_back({i, (i + 2) % n, 1.0});
      }
      break;
    case Topology::erdos_renyi: {
      if (!(p > 0.0 && p < 1.0)) throw ArgumentError("erdos_renyi needs 0 < p < 1");
      Rng rng(seed);
      for (int attempt = 0; attempt <= 100; ++attempt) {
        auto g = erdos_renyi_once(n, p, rng);
        if (diagnose(g).connected) return g;
      }
      throw GenerationError("G(" + std::to_string(n) + ", " + std::to_string(p) +
                            ") not connected after 100 retries");
    }
  }
  return Graph(n, std::move(edges));
}

double matched_er_probability(const SyntheticParams& params, std::size_t n) {
  // Expected planted-partition edges divided by the number of vertex pairs.
  double within = 0.0;
  double total_pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  for (std::size_t b = 0; b < params.blocks; ++b) {
    const auto lo = b * n / params.blocks;
    const auto hi = (b + 1) * n / params.blocks;
    const double s = static_cast<double>(hi - lo);
    within += s * (s - 1.0) / 2.0;
  }
  const double between = total_pairs - within;
  return (within * params.p_in + between * params.p_out) / total_pairs;
}

Dataset generate_synthetic_dataset(const SyntheticParams& params, std::uint64_t seed) {
  if (params.blocks == 0 || params.nodes < params.blocks || params.min_nodes > params.nodes ||
      params.min_nodes < 2 || params.max_weight < 1) {
    throw ArgumentError("invalid synthetic dataset parameters");
  }
  Dataset ds;
  ds.name = params.fixed_vertices ? "SYNTH-FIXED" : "SYNTH-PLANTED";
  Rng rng(seed);
  const std::size_t total = params.graphs_a + params.graphs_b;
  for (std::size_t g = 0; g < total; ++g) {
    const bool planted = g < params.graphs_a;
    const std::size_t n =
        params.fixed_vertices
            ? params.nodes
            : params.min_nodes + static_cast<std::size_t>(rng.below(params.nodes - params.min_nodes + 1));
    const double p_er = matched_er_probability(params, n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double p = p_er;
        if (planted) {
          const bool same = i * params.blocks / n == j * params.blocks / n;
          p = same ? params.p_in : params.p_out;
        }
        if (!rng.bernoulli(p)) continue;
        const double w = params.max_weight == 1
                             ? 1.0
                             : 1.0 + static_cast<double>(rng.below(
                                         static_cast<std::uint64_t>(params.max_weight)));
        edges.push_back({i, j, w});
      }
    }
    ds.graphs.emplace_back(n, std::move(edges), std::nullopt, "g" + std::to_string(g));
    ds.class_labels.push_back(planted ? 0 : 1);
  }
  return ds;
}

SyntheticParams fixed_vertex_params() { return {}; }

SyntheticParams planted_signal_params() {
  SyntheticParams p;
  p.graphs_a = 100;
  p.graphs_b = 100;
  p.nodes = 40;
  p.min_nodes = 20;
  p.max_weight = 1;
  p.fixed_vertices = false;
  return p;
}

}  // namespace dynfeat
