#include "dynfeat/walk_operator.hpp"

#include <algorithm>

#include "dynfeat/errors.hpp"

namespace dynfeat {

WalkOperator::WalkOperator(const Graph& g, bool use_weights) : n_(g.vertex_count()) {
  if (n_ == 0) throw ArgumentError("walk operator needs at least one vertex");
  auto base = g.adjacency(!use_weights);
  // Rebuild with a self-loop slot for isolated vertices.
  adj_.offsets.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    adj_.offsets[i + 1] = adj_.offsets[i] + std::max<std::size_t>(base.degree(i), 1);
  }
  adj_.targets.resize(adj_.offsets[n_]);
  adj_.weights.resize(adj_.offsets[n_]);
  strength_.assign(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    auto out = adj_.offsets[i];
    if (base.degree(i) == 0) {
      adj_.targets[out] = i;
      adj_.weights[out] = 1.0;
      strength_[i] = 1.0;
      repaired_ = true;
      continue;
    }
    long double s = 0.0L;
    for (auto k = base.offsets[i]; k < base.offsets[i + 1]; ++k, ++out) {
      adj_.targets[out] = base.targets[k];
      adj_.weights[out] = base.weights[k];
      s += base.weights[k];
    }
    strength_[i] = static_cast<double>(s);
  }
  long double total = 0.0L;
  for (double d : strength_) total += d;
  total_ = static_cast<double>(total);
  pi_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    pi_[i] = static_cast<double>(static_cast<long double>(strength_[i]) / total);
  }
}

void WalkOperator::apply_right(std::span<const double> x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0.0) continue;
    const double scaled = x[i] / strength_[i];
    for (auto k = adj_.offsets[i]; k < adj_.offsets[i + 1]; ++k) {
      out[adj_.targets[k]] += scaled * adj_.weights[k];
    }
  }
}

void WalkOperator::apply(std::span<const double> y, std::span<double> out) const {
  for (std::size_t i = 0; i < n_; ++i) {
    long double acc = 0.0L;
    for (auto k = adj_.offsets[i]; k < adj_.offsets[i + 1]; ++k) {
      acc += adj_.weights[k] * y[adj_.targets[k]];
    }
    out[i] = static_cast<double>(acc / strength_[i]);
  }
}

double WalkOperator::transition(std::size_t i, std::size_t j) const {
  const auto first = adj_.targets.begin() + static_cast<std::ptrdiff_t>(adj_.offsets[i]);
  const auto last = adj_.targets.begin() + static_cast<std::ptrdiff_t>(adj_.offsets[i + 1]);
  const auto it = std::lower_bound(first, last, j);
  if (it == last || *it != j) return 0.0;
  return adj_.weights[static_cast<std::size_t>(it - adj_.targets.begin())] / strength_[i];
}

}  // namespace dynfeat
