#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "dynfeat/graph.hpp"

namespace testing {

using dynfeat::Edge;
using dynfeat::Graph;

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
  return Graph(n, e);
}

inline Graph ring_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, e);
}

inline Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.push_back({0, i, 1.0});
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  return Graph(n, e);
}

// Plain std::mt19937_64 streams keep the fixtures independent of the library Rng.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& gen, bool weighted = false) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.5, 5.0);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(gen) < p) e.push_back({i, j, weighted ? weight(gen) : 1.0});
  return Graph(n, e);
}

inline std::vector<std::size_t> random_partition(std::size_t n, std::size_t k, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<std::size_t> out(n);
  for (auto& c : out) c = pick(gen);
  return out;
}

// Dense W with unit self-loops on isolated vertices.
inline Eigen::MatrixXd dense_weights(const Graph& g, bool use_weights = true) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double x = use_weights ? e.weight : 1.0;
    w(e.u, e.v) = x;
    w(e.v, e.u) = x;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (w.row(i).sum() == 0.0) w(i, i) = 1.0;
  return w;
}

struct DenseWalk {
  Eigen::MatrixXd m;
  Eigen::VectorXd pi;
};

inline DenseWalk dense_walk(const Graph& g, bool use_weights = true) {
  const Eigen::MatrixXd w = dense_weights(g, use_weights);
  const Eigen::VectorXd d = w.rowwise().sum();
  DenseWalk out;
  out.m = d.cwiseInverse().asDiagonal() * w;
  out.pi = d / d.sum();
  return out;
}

// rho(t) = Pi M^t - pi pi^T.
inline Eigen::MatrixXd dense_rho(const DenseWalk& dw, int t) {
  Eigen::MatrixXd mt = Eigen::MatrixXd::Identity(dw.m.rows(), dw.m.cols());
  for (int s = 0; s < t; ++s) mt = mt * dw.m;
  return dw.pi.asDiagonal() * mt - dw.pi * dw.pi.transpose();
}

// Eigenvalues of M sorted by decreasing magnitude, via the symmetric similarity.
inline std::vector<double> walk_eigenvalues(const Graph& g, bool use_weights = true) {
  const Eigen::MatrixXd w = dense_weights(g, use_weights);
  const Eigen::VectorXd s = w.rowwise().sum().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd sym = s.asDiagonal() * w * s.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
  return ev;
}

// Q = sum_c (e_c / m - (deg_c / 2m)^2) with weighted e_c, deg_c.
inline double modularity(const Graph& g, const std::vector<std::size_t>& part, std::size_t k) {
  std::vector<double> inside(k, 0.0);
  std::vector<double> degree(k, 0.0);
  double m = 0.0;
  for (const auto& e : g.edges()) {
    m += e.weight;
    if (part[e.u] == part[e.v]) inside[part[e.u]] += e.weight;
    degree[part[e.u]] += e.weight;
    degree[part[e.v]] += e.weight;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) q += inside[c] / m - (degree[c] / (2 * m)) * (degree[c] / (2 * m));
  return q;
}

}  // namespace testing
