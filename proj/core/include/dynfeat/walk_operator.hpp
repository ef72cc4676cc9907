#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynfeat/graph.hpp"

namespace dynfeat {

/// Random-walk transition operator M = D^-1 W of a graph.
///
/// Vertices of degree zero get a unit self-loop so that M stays
/// row-stochastic and every stationary mass pi_i = d_i / 2m is positive.
/// With `use_weights = false` every edge counts with weight 1.
class WalkOperator {
 public:
  explicit WalkOperator(const Graph& g, bool use_weights = true);

  std::size_t vertex_count() const { return n_; }
  const std::vector<double>& strength() const { return strength_; }
  double total_strength() const { return total_; }
  const std::vector<double>& stationary() const { return pi_; }
  bool self_loop_repaired() const { return repaired_; }

  /// Row vector step x -> x M.
  void apply_right(std::span<const double> x, std::span<double> out) const;
  /// Column vector step y -> M y.
  void apply(std::span<const double> y, std::span<double> out) const;

  /// Neighbor lists including repair self-loops; weights are raw W entries.
  const Adjacency& adjacency() const { return adj_; }

  /// Transition probability M_ij (dense lookup, O(deg i)).
  double transition(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_ = 0;
  Adjacency adj_;
  std::vector<double> strength_;
  std::vector<double> pi_;
  double total_ = 0.0;
  bool repaired_ = false;
};

}  // namespace dynfeat
