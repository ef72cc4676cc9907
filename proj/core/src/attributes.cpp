#include "dynfeat/attributes.hpp"

#include <algorithm>
#include <queue>
#include <stack>

#include "dynfeat/errors.hpp"

namespace dynfeat {

AttributeValue degree_attribute(const WalkOperator& walk) {
  return {"deg", walk.strength()};
}

namespace {

// Triangles through each vertex, by merging sorted neighbor lists of every edge.
std::vector<double> count_triangles(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  std::vector<double> t(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
      const auto v = adj.targets[e];
      if (v <= u) continue;
      // Common neighbors w > v close the triangle u < v < w exactly once.
      auto a = adj.offsets[u];
      auto b = adj.offsets[v];
      while (a < adj.offsets[u + 1] && b < adj.offsets[v + 1]) {
        const auto x = adj.targets[a];
        const auto y = adj.targets[b];
        if (x < y) {
          ++a;
        } else if (y < x) {
          ++b;
        } else {
          if (x > v) {
            t[u] += 1.0;
            t[v] += 1.0;
            t[x] += 1.0;
          }
          ++a;
          ++b;
        }
      }
    }
  }
  return t;
}

}  // namespace

AttributeValue triangles_per_node(const Graph& g) {
  return {"tri", count_triangles(g.adjacency(true))};
}

AttributeValue local_clustering(const Graph& g) {
  const auto adj = g.adjacency(true);
  auto c = count_triangles(adj);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double d = static_cast<double>(adj.degree(i));
    c[i] = d <= 1.0 ? 0.0 : 2.0 * c[i] / (d * (d - 1.0));
  }
  return {"clust", std::move(c)};
}

AttributeValue betweenness(const Graph& g) {
  const auto adj = g.adjacency(true);
  const std::size_t n = adj.vertex_count();
  std::vector<double> score(n, 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (auto e = adj.offsets[v]; e < adj.offsets[v + 1]; ++e) {
        const auto w = adj.targets[e];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Dependency accumulation in reverse BFS order; predecessors are the
    // neighbors one level closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (auto e = adj.offsets[w]; e < adj.offsets[w + 1]; ++e) {
        const auto v = adj.targets[e];
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }
  for (auto& x : score) x /= 2.0;
  return {"betw", std::move(score)};
}

AttributeValue label_indicator(const Graph& g, const std::vector<NodeLabel>& universe) {
  if (!g.node_labels()) {
    throw ArgumentError("graph '" + g.id() + "' has no node labels");
  }
  Indicator h;
  h.columns = universe.size();
  h.column_of_row.reserve(g.vertex_count());
  for (auto label : *g.node_labels()) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), label);
    if (it == universe.end() || *it != label) {
      throw ArgumentError("node label " + std::to_string(label) + " not in label universe");
    }
    h.column_of_row.push_back(static_cast<std::size_t>(it - universe.begin()));
  }
  return {"lab", std::move(h)};
}

AttributeValue identity_indicator(std::size_t n) {
  if (n == 0) throw ArgumentError("identity indicator needs n >= 1");
  Indicator h;
  h.columns = n;
  h.column_of_row.resize(n);
  for (std::size_t i = 0; i < n; ++i) h.column_of_row[i] = i;
  return {"id", std::move(h)};
}

}  // namespace dynfeat
