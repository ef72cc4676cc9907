#include "dynfeat/assortativity.hpp"

#include <algorithm>
#include <string>

#include "dynfeat/errors.hpp"

namespace dynfeat {

TimeGrid::TimeGrid(std::vector<int> ts) : ts_(std::move(ts)) {
  std::sort(ts_.begin(), ts_.end());
  if (std::adjacent_find(ts_.begin(), ts_.end()) != ts_.end()) {
    throw ArgumentError("time grid has repeated entries");
  }
  if (!ts_.empty() && ts_.front() < 0) throw ArgumentError("time grid entries must be >= 0");
}

namespace {

// Sum of pi_i * a_i * b_i in extended precision.
double weighted_dot(const std::vector<double>& pi, std::span<const double> a,
                    std::span<const double> b) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    acc += static_cast<long double>(pi[i]) * a[i] * b[i];
  }
  return static_cast<double>(acc);
}

// Shared kernel: accumulates u_x(t) of the centered vector `x` into `out`.
void accumulate_centered(const WalkOperator& walk, std::vector<double>& x, const TimeGrid& ts,
                         std::vector<long double>& out) {
  const auto& pi = walk.stationary();
  long double mean = 0.0L;
  for (std::size_t i = 0; i < pi.size(); ++i) mean += static_cast<long double>(pi[i]) * x[i];
  for (auto& xi : x) xi = static_cast<double>(xi - mean);

  std::vector<double> y(x);
  std::vector<double> scratch(x.size());
  int t_now = 0;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    for (; t_now < ts.values()[j]; ++t_now) {
      walk.apply(y, scratch);
      y.swap(scratch);
    }
    out[j] += weighted_dot(pi, x, y);
  }
}

}  // namespace

std::vector<double> numeric_assortativity(const WalkOperator& walk, std::span<const double> v,
                                          const TimeGrid& ts) {
  if (v.size() != walk.vertex_count()) {
    throw ArgumentError("attribute length " + std::to_string(v.size()) + " != vertex count " +
                        std::to_string(walk.vertex_count()));
  }
  std::vector<double> x(v.begin(), v.end());
  std::vector<long double> acc(ts.size(), 0.0L);
  accumulate_centered(walk, x, ts, acc);
  return {acc.begin(), acc.end()};
}

std::vector<double> categorical_assortativity(const WalkOperator& walk, const Indicator& h,
                                              const TimeGrid& ts) {
  if (h.rows() != walk.vertex_count()) {
    throw ArgumentError("indicator has " + std::to_string(h.rows()) + " rows, graph has " +
                        std::to_string(walk.vertex_count()) + " vertices");
  }
  std::vector<bool> used(h.columns, false);
  for (auto c : h.column_of_row) {
    if (c >= h.columns) throw ArgumentError("indicator column out of range");
    used[c] = true;
  }
  std::vector<long double> acc(ts.size(), 0.0L);
  std::vector<double> x(h.rows());
  // Empty columns are the zero attribute and contribute nothing.
  for (std::size_t c = 0; c < h.columns; ++c) {
    if (!used[c]) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = h.column_of_row[i] == c ? 1.0 : 0.0;
    accumulate_centered(walk, x, ts, acc);
  }
  return {acc.begin(), acc.end()};
}

std::vector<std::vector<double>> vertex_autocovariances(const WalkOperator& walk,
                                                        const TimeGrid& ts) {
  const std::size_t n = walk.vertex_count();
  const auto& adj = walk.adjacency();
  const auto& d = walk.strength();
  const auto& pi = walk.stationary();
  std::vector<std::vector<double>> out(n, std::vector<double>(ts.size()));

  std::vector<double> cur(n, 0.0), nxt(n, 0.0);
  std::vector<std::size_t> cur_list, nxt_list;
  for (std::size_t k = 0; k < n; ++k) {
    cur[k] = 1.0;
    cur_list.assign(1, k);
    int t_now = 0;
    for (std::size_t j = 0; j < ts.size(); ++j) {
      for (; t_now < ts.values()[j]; ++t_now) {
        nxt_list.clear();
        for (auto i : cur_list) {
          const double mass = cur[i] / d[i];
          for (auto e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
            const auto target = adj.targets[e];
            if (nxt[target] == 0.0) nxt_list.push_back(target);
            nxt[target] += mass * adj.weights[e];
          }
          cur[i] = 0.0;
        }
        std::swap(cur, nxt);
        std::swap(cur_list, nxt_list);
      }
      // cur holds row k of M^t.
      out[k][j] = pi[k] * cur[k] - pi[k] * pi[k];
    }
    for (auto i : cur_list) cur[i] = 0.0;
  }
  return out;
}

std::vector<double> identity_assortativity(const WalkOperator& walk, const TimeGrid& ts) {
  if (walk.vertex_count() > kIdentityPartitionCapacity) {
    throw CapacityError("identity partition feature limited to " +
                        std::to_string(kIdentityPartitionCapacity) + " vertices, graph has " +
                        std::to_string(walk.vertex_count()));
  }
  const auto per_vertex = vertex_autocovariances(walk, ts);
  std::vector<double> out(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    long double acc = 0.0L;
    for (const auto& row : per_vertex) acc += row[j];
    out[j] = static_cast<double>(acc);
  }
  return out;
}

DenseMatrix dense_transition_matrix(const WalkOperator& walk) {
  const std::size_t n = walk.vertex_count();
  DenseMatrix m{n, std::vector<double>(n * n, 0.0)};
  const auto& adj = walk.adjacency();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
      m(i, adj.targets[e]) += adj.weights[e] / walk.strength()[i];
    }
  }
  return m;
}

DenseMatrix dense_autocovariance_oracle(const WalkOperator& walk, int t) {
  const std::size_t n = walk.vertex_count();
  if (n > kDenseOracleCapacity) {
    throw ArgumentError("dense oracle limited to " + std::to_string(kDenseOracleCapacity) +
                        " vertices");
  }
  if (t < 0) throw ArgumentError("negative time lag");
  const auto m = dense_transition_matrix(walk);
  DenseMatrix power{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) power(i, i) = 1.0;
  DenseMatrix next{n, std::vector<double>(n * n)};
  for (int s = 0; s < t; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long double acc = 0.0L;
        for (std::size_t k = 0; k < n; ++k) acc += static_cast<long double>(power(i, k)) * m(k, j);
        next(i, j) = static_cast<double>(acc);
      }
    }
    std::swap(power, next);
  }
  const auto& pi = walk.stationary();
  DenseMatrix rho{n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = pi[i] * power(i, j) - pi[i] * pi[j];
  }
  return rho;
}

}  // namespace dynfeat
