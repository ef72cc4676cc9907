#include "dynfeat/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dynfeat/errors.hpp"
#include "dynfeat/random.hpp"

namespace dynfeat {

double LinearModel::decision(std::span<const double> x) const {
  double s = bias;
  for (std::size_t j = 0; j < weights.size(); ++j) s += weights[j] * x[j];
  return s;
}

namespace {

struct Objectives {
  double primal;
  double dual;
};

Objectives objectives(const Matrix& x, std::span<const int> y, const std::vector<double>& w,
                      double b, const std::vector<double>& alpha, double c) {
  double wnorm = b * b;
  for (double v : w) wnorm += v * v;
  double hinge = 0.0;
  double alpha_sum = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double s = b;
    const auto row = x.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * row[j];
    hinge += std::max(0.0, 1.0 - y[i] * s);
    alpha_sum += alpha[i];
  }
  return {0.5 * wnorm + c * hinge, alpha_sum - 0.5 * wnorm};
}

}  // namespace

LinearModel train_linear_svm(const Matrix& x, std::span<const int> y, const SvmOptions& opts,
                             SvmTrace* trace) {
  if (!(opts.C > 0.0)) throw ArgumentError("SVM needs C > 0");
  if (y.size() != x.rows()) throw ArgumentError("label count does not match sample count");
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  bool pos = false;
  bool neg = false;
  for (int v : y) {
    if (v == 1) {
      pos = true;
    } else if (v == -1) {
      neg = true;
    } else {
      throw ArgumentError("SVM labels must be +1 or -1");
    }
  }
  if (!pos || !neg) throw DegenerateError("SVM training set contains a single class");

  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 1.0;  // bias feature
    for (double v : x.row(i)) s += v * v;
    q[i] = s;
  }
  std::vector<double> alpha(n, 0.0);
  std::vector<double> w(p, 0.0);
  double b = 0.0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(opts.seed);
  const double c = opts.C;
  const double initial_gap = c * static_cast<double>(n);

  LinearModel model;
  int epoch = 0;
  bool converged = false;
  while (epoch < opts.max_epochs) {
    ++epoch;
    rng.shuffle(std::span<std::size_t>(order));
    for (auto i : order) {
      const auto row = x.row(i);
      double s = b;
      for (std::size_t j = 0; j < p; ++j) s += w[j] * row[j];
      const double g = y[i] * s - 1.0;
      double pg = g;
      if (alpha[i] == 0.0) {
        pg = std::min(g, 0.0);
      } else if (alpha[i] == c) {
        pg = std::max(g, 0.0);
      }
      if (std::abs(pg) < 1e-12) continue;
      const double old = alpha[i];
      alpha[i] = std::clamp(old - g / q[i], 0.0, c);
      const double delta = (alpha[i] - old) * y[i];
      for (std::size_t j = 0; j < p; ++j) w[j] += delta * row[j];
      b += delta;
    }
    const auto obj = objectives(x, y, w, b, alpha, c);
    if (trace) {
      trace->primal.push_back(obj.primal);
      trace->dual.push_back(obj.dual);
    }
    if ((obj.primal - obj.dual) <= opts.relative_gap * initial_gap) {
      converged = true;
      break;
    }
  }
  if (trace) {
    trace->epochs = epoch;
    trace->converged = converged;
  }
  model.weights = std::move(w);
  model.bias = b;
  return model;
}

}  // namespace dynfeat
