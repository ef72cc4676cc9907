#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynfeat/matrix.hpp"

namespace dynfeat {

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;

  double decision(std::span<const double> x) const;
};

struct SvmOptions {
  double C = 1.0;
  double relative_gap = 1e-4;  // stop when (P - D) / (C n) falls below this
  int max_epochs = 2000;
  std::uint64_t seed = 0;
};

/// Per-epoch objective history, for diagnostics and tests.
struct SvmTrace {
  std::vector<double> primal;
  std::vector<double> dual;
  int epochs = 0;
  bool converged = false;
};

/// Linear C-SVM (hinge loss) by dual coordinate descent.
///
/// Minimizes 1/2 |[w; b]|^2 + C sum_i max(0, 1 - y_i (w.x_i + b)); the bias is
/// handled as an extra constant feature, so it is lightly regularized. Each
/// epoch visits the coordinates in a seeded random order. Labels must be +1/-1;
/// a single-class problem throws DegenerateError.
LinearModel train_linear_svm(const Matrix& x, std::span<const int> y, const SvmOptions& opts,
                             SvmTrace* trace = nullptr);

}  // namespace dynfeat
