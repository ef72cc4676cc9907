#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynfeat/walk_operator.hpp"

namespace dynfeat {

/// Sorted distinct non-negative integer time lags.
class TimeGrid {
 public:
  TimeGrid() : TimeGrid({0, 1, 2, 3}) {}
  TimeGrid(std::vector<int> ts);

  const std::vector<int>& values() const { return ts_; }
  std::size_t size() const { return ts_.size(); }
  int max() const { return ts_.empty() ? 0 : ts_.back(); }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  std::vector<int> ts_;
};

/// n x k binary matrix with exactly one 1 per row, stored as the column of each row.
struct Indicator {
  std::size_t columns = 0;
  std::vector<std::size_t> column_of_row;

  std::size_t rows() const { return column_of_row.size(); }
};

/// Largest graph for which the identity-partition feature is computed.
inline constexpr std::size_t kIdentityPartitionCapacity = 4096;

/// u_v(t) = v^T (Pi M^t - pi^T pi) v for every t in the grid (same order).
///
/// Evaluated as a quadratic form by repeated sparse application of M to the
/// pi-centered attribute, one application per unit increase of t.
std::vector<double> numeric_assortativity(const WalkOperator& walk, std::span<const double> v,
                                          const TimeGrid& ts);

/// r(t, H) = Tr[H^T rho(t) H], the sum of u_h(t) over the columns h of H.
std::vector<double> categorical_assortativity(const WalkOperator& walk, const Indicator& h,
                                              const TimeGrid& ts);

/// r(t, I) for the identity partition: sum_k pi_k (M^t)_kk - |pi|^2.
/// Throws CapacityError above kIdentityPartitionCapacity vertices.
std::vector<double> identity_assortativity(const WalkOperator& walk, const TimeGrid& ts);

/// u_{e_k}(t) = pi_k (M^t)_kk - pi_k^2 for every vertex k; result[k][j] is for ts[j].
///
/// Return probabilities are obtained by propagating each e_k only over its
/// t_max-hop neighborhood.
std::vector<std::vector<double>> vertex_autocovariances(const WalkOperator& walk,
                                                        const TimeGrid& ts);

/// Row-major dense square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
};

inline constexpr std::size_t kDenseOracleCapacity = 200;

/// Explicit rho(t) = Pi M^t - pi^T pi by dense matrix powering (n <= 200).
DenseMatrix dense_autocovariance_oracle(const WalkOperator& walk, int t);

/// Dense copy of M.
DenseMatrix dense_transition_matrix(const WalkOperator& walk);

}  // namespace dynfeat
