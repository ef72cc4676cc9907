#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dynfeat/assortativity.hpp"
#include "dynfeat/graph.hpp"
#include "dynfeat/walk_operator.hpp"

namespace dynfeat {

/// A named node attribute: either a real vector or a category indicator.
struct AttributeValue {
  std::string name;
  std::variant<std::vector<double>, Indicator> value;

  bool is_numeric() const { return std::holds_alternative<std::vector<double>>(value); }
  const std::vector<double>& numeric() const { return std::get<std::vector<double>>(value); }
  const Indicator& indicator() const { return std::get<Indicator>(value); }
};

/// Vertex strengths (incident weight sums) of the repaired walk graph.
AttributeValue degree_attribute(const WalkOperator& walk);

// The structural attributes below ignore weights and operate on the simple graph.

/// 2 t_i / (d_i (d_i - 1)), or 0 when d_i <= 1.
AttributeValue local_clustering(const Graph& g);

/// Number of triangles through each vertex.
AttributeValue triangles_per_node(const Graph& g);

/// Unnormalized shortest-path betweenness, each unordered pair counted once.
AttributeValue betweenness(const Graph& g);

/// One column per entry of `universe` (sorted), row i marks the label of vertex i.
/// Throws ArgumentError when the graph is unlabeled or a label is outside `universe`.
AttributeValue label_indicator(const Graph& g, const std::vector<NodeLabel>& universe);

/// H = I_n.
AttributeValue identity_indicator(std::size_t n);

}  // namespace dynfeat
