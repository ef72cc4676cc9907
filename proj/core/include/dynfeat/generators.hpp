#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dynfeat/graph.hpp"

namespace dynfeat {

enum class Topology { communities3, ring, clique, erdos_renyi, star, regular };

std::string_view to_string(Topology kind);
std::optional<Topology> parse_topology(std::string_view name);

/// Toy topologies used for the assortativity-versus-time study.
///
/// - communities3: three equal cliques of n/3 vertices; the last vertex of
///   clique c is bridged to the first vertex of clique c+1.
/// - ring: cycle C_n.    - clique: K_n.    - star: vertex 0 joined to all others.
/// - regular: degree-4 circulant, i ~ i±1, i±2 (needs n >= 5).
/// - erdos_renyi: G(n, p), redrawn from the same stream until connected
///   (at most 100 retries, else GenerationError).
///
/// Pure function of its arguments; `p` and `seed` only matter for erdos_renyi.
Graph generate_topology(Topology kind, std::size_t n, double p = 0.4, std::uint64_t seed = 0);

/// Parameters of the synthetic two-class generator.
///
/// Class 0 graphs are planted partitions with `blocks` equal blocks; class 1
/// graphs are Erdős–Rényi with the same expected edge count. With
/// `fixed_vertices`, every graph has exactly `nodes` vertices and vertex k
/// always sits in block k * blocks / nodes; otherwise each graph draws its
/// vertex count uniformly from [min_nodes, nodes] and edges are unweighted.
struct SyntheticParams {
  std::size_t graphs_a = 91;
  std::size_t graphs_b = 113;
  std::size_t nodes = 84;
  std::size_t min_nodes = 84;
  std::size_t blocks = 3;
  double p_in = 0.3;
  double p_out = 0.05;
  int max_weight = 10;  // weights uniform in 1..max_weight; 1 gives unweighted graphs
  bool fixed_vertices = true;
};

/// Probability of the density-matched Erdős–Rényi class for `n` vertices.
double matched_er_probability(const SyntheticParams& params, std::size_t n);

Dataset generate_synthetic_dataset(const SyntheticParams& params, std::uint64_t seed);

/// Defaults matching the fixed-vertex layout (84 vertices, 91 + 113 graphs, weights 1..10).
SyntheticParams fixed_vertex_params();

/// Variable-size unweighted graphs, 100 + 100, with planted communities.
SyntheticParams planted_signal_params();

}  // namespace dynfeat
