#include "dynfeat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "dynfeat/errors.hpp"

namespace dynfeat {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long double>(a[i]) * b[i];
  return static_cast<double>(acc);
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void scale(std::vector<double>& a, double s) {
  for (auto& x : a) x *= s;
}

class Similarity {
 public:
  explicit Similarity(const WalkOperator& walk) : walk_(walk), inv_sqrt_(walk.vertex_count()) {
    for (std::size_t i = 0; i < inv_sqrt_.size(); ++i) {
      inv_sqrt_[i] = 1.0 / std::sqrt(walk.strength()[i]);
    }
  }

  void apply(const std::vector<double>& x, std::vector<double>& out) const {
    const auto& adj = walk_.adjacency();
    for (std::size_t i = 0; i < x.size(); ++i) {
      long double acc = 0.0L;
      for (auto e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
        const auto j = adj.targets[e];
        acc += adj.weights[e] * x[j] * inv_sqrt_[j];
      }
      out[i] = static_cast<double>(acc * inv_sqrt_[i]);
    }
  }

 private:
  const WalkOperator& walk_;
  std::vector<double> inv_sqrt_;
};

// Removes the components along each (unit) basis vector.
void deflate(std::vector<double>& x, const std::vector<std::vector<double>>& basis) {
  for (const auto& q : basis) {
    const double c = dot(q, x);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * q[i];
  }
}

std::vector<double> start_vector(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t z = (i + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    x[i] = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
  }
  return x;
}

// |wM - lambda w| for unit w.
double left_residual(const WalkOperator& walk, const std::vector<double>& w, double lambda) {
  std::vector<double> wm(w.size());
  walk.apply_right(w, wm);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const long double r = static_cast<long double>(wm[i]) - static_cast<long double>(lambda) * w[i];
    acc += r * r;
  }
  return static_cast<double>(std::sqrt(acc));
}

}  // namespace

SecondEigenpair second_left_eigenvector(const WalkOperator& walk, double tol, int max_iter) {
  const std::size_t n = walk.vertex_count();
  if (n < 2) throw ArgumentError("second eigenvector needs at least two vertices");
  const Similarity s(walk);

  std::vector<double> top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = std::sqrt(walk.strength()[i]);
  scale(top, 1.0 / norm(top));
  const std::vector<std::vector<double>> basis{top};

  auto x = start_vector(n);
  deflate(x, basis);
  scale(x, 1.0 / norm(x));

  std::vector<double> sx(n), ssx(n), plus(n), minus(n), w(n), sy(n);
  SecondEigenpair best;
  double last_residual = INFINITY;
  for (int it = 1; it <= max_iter; ++it) {
    s.apply(x, sx);
    const double mu = norm(sx);
    // Split x into its +mu and -mu eigen-directions; keep the dominant one.
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = mu * x[i] + sx[i];
      minus[i] = mu * x[i] - sx[i];
    }
    double np = norm(plus);
    double nm = norm(minus);
    if (mu == 0.0) {
      // x lies in the null space of S.
      plus = x;
      np = 1.0;
      nm = 0.0;
    }
    auto& y = np >= nm ? plus : minus;
    const double ny = std::max(np, nm);
    if (ny > 0.0) {
      scale(y, 1.0 / ny);
      s.apply(y, sy);
      const double lambda = dot(y, sy);
      for (std::size_t i = 0; i < n; ++i) w[i] = y[i] * std::sqrt(walk.strength()[i]);
      scale(w, 1.0 / norm(w));
      last_residual = left_residual(walk, w, lambda);
      if (last_residual <= tol) {
        best.vector = w;
        best.eigenvalue = lambda;
        best.residual = last_residual;
        best.iterations = it;
        // Eigenvalue magnitude shared by both signs.
        best.degenerate = std::min(np, nm) > 1e-6 * ny;
        break;
      }
    }
    s.apply(sx, ssx);
    deflate(ssx, basis);
    const double nx = norm(ssx);
    if (nx == 0.0) continue;
    x = ssx;
    scale(x, 1.0 / nx);
  }
  if (best.vector.empty()) {
    throw ConvergenceError("second eigenvector did not converge in " + std::to_string(max_iter) +
                               " iterations (residual " + std::to_string(last_residual) + ")",
                           last_residual);
  }

  // Probe the next magnitude: a second deflated run that reaches |lambda|
  // means the eigenspace is not one-dimensional.
  if (!best.degenerate && n > 2) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = best.vector[i] / std::sqrt(walk.strength()[i]);
    scale(y, 1.0 / norm(y));
    const std::vector<std::vector<double>> basis2{top, y};
    auto z = start_vector(n);
    // Perturb the start so it is not parallel to the first run's.
    for (std::size_t i = 0; i < n; ++i) z[i] += (i % 2 == 0 ? 0.25 : -0.25);
    deflate(z, basis2);
    double nz = norm(z);
    const double target = std::abs(best.eigenvalue) * (1.0 - 1e-6);
    double previous = -1.0;
    for (int it = 0; it < max_iter && nz > 0.0; ++it) {
      scale(z, 1.0 / nz);
      s.apply(z, sx);
      const double mu = norm(sx);  // Rayleigh estimate from below
      if (mu >= target) {
        best.degenerate = true;
        break;
      }
      if (std::abs(mu - previous) <= 1e-13 * std::max(1.0, mu)) break;
      previous = mu;
      s.apply(sx, z);
      deflate(z, basis2);
      nz = norm(z);
    }
  }

  const auto largest = std::max_element(best.vector.begin(), best.vector.end(),
                                        [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (*largest < 0.0) scale(best.vector, -1.0);
  return best;
}

}  // namespace dynfeat
