#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dynfeat {

using NodeLabel = std::int64_t;

/// Undirected edge with `u < v` and a positive weight.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Compressed neighbor lists. Neighbors of each vertex are sorted ascending.
struct Adjacency {
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<std::size_t> targets;
  std::vector<double> weights;

  std::size_t vertex_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::size_t degree(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
};

/// Immutable undirected weighted graph with optional categorical node labels.
///
/// Construction validates the edge list: endpoints in range, no self-loops,
/// no duplicate pairs, finite positive weights. Edges are stored normalized
/// (`u < v`) and sorted, so two graphs built from the same edge set compare
/// equal regardless of input order.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges,
        std::optional<std::vector<NodeLabel>> node_labels = std::nullopt,
        std::string id = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<NodeLabel>>& node_labels() const { return node_labels_; }
  bool has_node_labels() const { return node_labels_.has_value(); }
  const std::string& id() const { return id_; }

  /// True when some edge weight differs from 1.
  bool is_weighted() const;

  /// Neighbor lists; `binarize` replaces every weight by 1.
  Adjacency adjacency(bool binarize = false) const;

  /// Relabel vertices: vertex `i` becomes `perm[i]`.
  Graph permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<NodeLabel>> node_labels_;
  std::string id_;
};

/// A labeled collection of graphs.
struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> class_labels;           // 0..C-1
  std::vector<NodeLabel> label_universe;   // sorted, distinct

  std::size_t size() const { return graphs.size(); }
  int class_count() const;
  bool has_node_labels() const;

  /// Checks |graphs| = |class_labels| and that every node label is in the universe.
  void validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Sorted distinct node labels over all graphs of a dataset.
std::vector<NodeLabel> collect_label_universe(const std::vector<Graph>& graphs);

struct GraphDiagnostics {
  bool connected = false;
  bool bipartite = false;
  std::size_t isolated_vertex_count = 0;
  std::size_t component_count = 0;
};

GraphDiagnostics diagnose(const Graph& g);

/// Summary row in the layout of the usual benchmark statistics table.
struct DatasetStats {
  std::string name;
  std::size_t num_graphs = 0;
  int classes = 0;
  std::optional<std::size_t> node_labels;  // empty for unlabeled datasets
  double avg_nodes = 0.0;
  double avg_edges = 0.0;
};

DatasetStats compute_stats(const Dataset& ds);

/// `name,num_graphs,classes,node_labels,avg_nodes,avg_edges`, means to 2 decimals.
std::string format_stats_csv(const DatasetStats& s);
inline constexpr const char* kStatsCsvHeader =
    "name,num_graphs,classes,node_labels,avg_nodes,avg_edges";

}  // namespace dynfeat
