#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dynfeat/assortativity.hpp"
#include "dynfeat/graph.hpp"
#include "dynfeat/matrix.hpp"

namespace dynfeat {

/// Candidate node attributes, in feature-column order.
enum class AttributeKind {
  degree,
  second_eigenvector,
  clustering,
  betweenness,
  triangles,
  identity_partition,
  node_labels,
};

inline constexpr AttributeKind kAllAttributes[] = {
    AttributeKind::degree,      AttributeKind::second_eigenvector, AttributeKind::clustering,
    AttributeKind::betweenness, AttributeKind::triangles,          AttributeKind::identity_partition,
    AttributeKind::node_labels,
};

/// Config spelling, e.g. "second_eigenvector".
std::string_view attribute_key(AttributeKind kind);
/// Column prefix, e.g. "eig2" for columns "eig2@0", "eig2@1", ...
std::string_view attribute_prefix(AttributeKind kind);
std::optional<AttributeKind> parse_attribute(std::string_view key);

enum class Selection { all, greedy_forward };
enum class VertexFeatures { append, replace };

struct FeatureConfig {
  std::vector<AttributeKind> attributes;  // kept sorted in enum order, no repeats
  TimeGrid ts;
  bool include_globals = true;
  bool fixed_vertex_mode = false;
  VertexFeatures vertex_features = VertexFeatures::append;
  bool use_weights = true;
  Selection selection = Selection::all;

  bool has(AttributeKind kind) const;
  void validate() const;

  /// degree, second_eigenvector, clustering, identity_partition, node_labels + globals.
  static FeatureConfig bioinformatics();
  /// degree, second_eigenvector, clustering, betweenness, triangles, identity_partition + globals.
  static FeatureConfig social();

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

/// Parse `key = value` lines ('#' starts a comment). Recognized keys:
///
///   preset          bio | social   (applied first, other keys override it)
///   attributes      comma list of degree, second_eigenvector, clustering,
///                   betweenness, triangles, identity_partition, node_labels
///   times           comma list of non-negative integers
///   globals         true | false
///   fixed_vertex    true | false
///   vertex_features append | replace
///   use_weights     true | false
///   selection       all | greedy_forward
///
/// Starts from the bioinformatics preset. Throws FormatError on unknown keys
/// or bad values.
FeatureConfig parse_feature_config(std::string_view text);
FeatureConfig load_feature_config(const std::filesystem::path& path);
std::string format_feature_config(const FeatureConfig& cfg);

struct FeatureVector {
  std::string graph_id;
  std::vector<double> values;
  std::set<std::string> degenerate;  // names of flagged columns

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct ColumnScaling {
  double mean = 0.0;
  double stddev = 1.0;
  bool scaled = false;  // false for zero-variance columns

  friend bool operator==(const ColumnScaling&, const ColumnScaling&) = default;
};

/// Rows of the learning problem: one feature vector and class per graph.
struct FeatureMatrix {
  std::vector<std::string> column_names;
  std::vector<FeatureVector> rows;
  std::vector<int> classes;
  std::optional<std::vector<ColumnScaling>> standardization;

  std::size_t size() const { return rows.size(); }
  Matrix to_matrix() const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;
};

/// Column names produced by `cfg`; `fixed_n` is the shared vertex count in
/// fixed-vertex mode.
std::vector<std::string> feature_columns(const FeatureConfig& cfg, std::size_t fixed_n = 0);

/// Per-graph assortativity features for a whole dataset.
///
/// For every numeric attribute a: `a@t` = u_a(t); `id@t` = r(t, I);
/// `lab@t` = r(t, H_labels) with the dataset-wide label universe; then, in
/// fixed-vertex mode, `v<k>@t` = u_{e_k}(t); `num_nodes`, `num_edges` last.
/// A second eigenvector that cannot be computed (n < 2 or no convergence)
/// yields zero columns flagged degenerate. Rows keep dataset order for any
/// `jobs`.
FeatureMatrix extract_features(const Dataset& ds, const FeatureConfig& cfg, int jobs = 1);

/// Fixed-vertex variant: requires cfg.fixed_vertex_mode and a common vertex
/// count (ArgumentError otherwise).
FeatureMatrix extract_fixed_vertex_features(const Dataset& ds, const FeatureConfig& cfg,
                                            int jobs = 1);

/// Features of a single graph. `universe` is only used with node_labels.
FeatureVector graph_features(const Graph& g, const FeatureConfig& cfg,
                             const std::vector<NodeLabel>& universe);

/// CSV with header `graph_id,class,<columns>`; values use 17 significant digits.
void export_csv(const FeatureMatrix& fm, const std::filesystem::path& path);
std::string to_csv(const FeatureMatrix& fm);
FeatureMatrix import_csv(const std::filesystem::path& path);
FeatureMatrix parse_csv(std::string_view text);

/// Attribute group of a column: the prefix before '@', "vertex" for `v<k>@t`,
/// "globals" for num_nodes / num_edges.
std::string column_group(std::string_view column);

}  // namespace dynfeat
