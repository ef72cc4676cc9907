#include "dynfeat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <set>
#include <string>

#include "dynfeat/errors.hpp"

namespace dynfeat {

Graph::Graph(std::size_t n, std::vector<Edge> edges,
             std::optional<std::vector<NodeLabel>> node_labels, std::string id)
    : n_(n), edges_(std::move(edges)), node_labels_(std::move(node_labels)), id_(std::move(id)) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") out of range for graph with " + std::to_string(n_) + " vertices");
    }
    if (e.u == e.v) {
      throw ArgumentError("self-loop on vertex " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ArgumentError("edge weight must be finite and positive");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  });
  if (dup != edges_.end()) {
    throw ArgumentError("duplicate edge (" + std::to_string(dup->u) + "," +
                        std::to_string(dup->v) + ")");
  }
  if (node_labels_ && node_labels_->size() != n_) {
    throw ArgumentError("node label count " + std::to_string(node_labels_->size()) +
                        " does not match vertex count " + std::to_string(n_));
  }
}

bool Graph::is_weighted() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight != 1.0; });
}

Adjacency Graph::adjacency(bool binarize) const {
  Adjacency adj;
  adj.offsets.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++adj.offsets[e.u + 1];
    ++adj.offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.targets.resize(adj.offsets[n_]);
  adj.weights.resize(adj.offsets[n_]);
  std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  // Edges are sorted by (u, v), so filling in this order keeps every list sorted:
  // v-side entries arrive with increasing u, u-side entries with increasing v,
  // and for a fixed vertex all v-side partners (smaller ids) precede u-side ones.
  for (const auto& e : edges_) {
    const double w = binarize ? 1.0 : e.weight;
    adj.targets[cursor[e.v]] = e.u;
    adj.weights[cursor[e.v]++] = w;
  }
  for (const auto& e : edges_) {
    const double w = binarize ? 1.0 : e.weight;
    adj.targets[cursor[e.u]] = e.v;
    adj.weights[cursor[e.u]++] = w;
  }
  return adj;
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw ArgumentError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({perm[e.u], perm[e.v], e.weight});
  std::optional<std::vector<NodeLabel>> labels;
  if (node_labels_) {
    labels.emplace(n_);
    for (std::size_t i = 0; i < n_; ++i) (*labels)[perm[i]] = (*node_labels_)[i];
  }
  return Graph(n_, std::move(edges), std::move(labels), id_);
}

int Dataset::class_count() const {
  if (class_labels.empty()) return 0;
  return *std::max_element(class_labels.begin(), class_labels.end()) + 1;
}

bool Dataset::has_node_labels() const {
  return !graphs.empty() &&
         std::all_of(graphs.begin(), graphs.end(), [](const Graph& g) { return g.has_node_labels(); });
}

void Dataset::validate() const {
  if (graphs.size() != class_labels.size()) {
    throw FormatError("dataset '" + name + "': " + std::to_string(graphs.size()) + " graphs but " +
                      std::to_string(class_labels.size()) + " class labels");
  }
  for (const auto& g : graphs) {
    if (!g.node_labels()) continue;
    for (auto label : *g.node_labels()) {
      if (!std::binary_search(label_universe.begin(), label_universe.end(), label)) {
        throw FormatError("dataset '" + name + "': node label " + std::to_string(label) +
                          " missing from label universe");
      }
    }
  }
}

std::vector<NodeLabel> collect_label_universe(const std::vector<Graph>& graphs) {
  std::set<NodeLabel> seen;
  for (const auto& g : graphs) {
    if (g.node_labels()) seen.insert(g.node_labels()->begin(), g.node_labels()->end());
  }
  return {seen.begin(), seen.end()};
}

GraphDiagnostics diagnose(const Graph& g) {
  GraphDiagnostics out;
  const auto adj = g.adjacency(true);
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  out.bipartite = true;
  for (std::size_t s = 0; s < n; ++s) {
    if (adj.degree(s) == 0) ++out.isolated_vertex_count;
    if (color[s] != -1) continue;
    ++out.component_count;
    color[s] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      for (auto k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
        const auto v = adj.targets[k];
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          out.bipartite = false;
        }
      }
    }
  }
  out.connected = out.component_count == 1;
  return out;
}

DatasetStats compute_stats(const Dataset& ds) {
  DatasetStats s;
  s.name = ds.name;
  s.num_graphs = ds.size();
  s.classes = ds.class_count();
  if (ds.has_node_labels()) s.node_labels = ds.label_universe.size();
  if (!ds.graphs.empty()) {
    double nodes = 0.0;
    double edges = 0.0;
    for (const auto& g : ds.graphs) {
      nodes += static_cast<double>(g.vertex_count());
      edges += static_cast<double>(g.edge_count());
    }
    s.avg_nodes = nodes / static_cast<double>(ds.size());
    s.avg_edges = edges / static_cast<double>(ds.size());
  }
  return s;
}

std::string format_stats_csv(const DatasetStats& s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, ",%zu,%d,%s,%.2f,%.2f", s.num_graphs, s.classes,
                s.node_labels ? std::to_string(*s.node_labels).c_str() : "NA", s.avg_nodes,
                s.avg_edges);
  return s.name + buf;
}

}  // namespace dynfeat
