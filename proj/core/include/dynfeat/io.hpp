#pragma once

#include <filesystem>
#include <string>

#include "dynfeat/graph.hpp"

namespace dynfeat {

/// Read a dataset in the multi-file TU benchmark layout.
///
/// Expects `{name}_A.txt`, `{name}_graph_indicator.txt` and
/// `{name}_graph_labels.txt` in `directory`; `{name}_node_labels.txt` and
/// `{name}_edge_attributes.txt` are picked up when present (the first column
/// of the edge attributes becomes the edge weight). Arcs listed in both
/// directions collapse into one undirected edge keeping the first weight seen;
/// self-loop arcs are dropped. Class labels are remapped to 0..C-1 in sorted
/// order of their original values.
///
/// Throws FormatError with file and line on malformed input.
Dataset load_tu_dataset(const std::filesystem::path& directory, const std::string& name);

/// Write `ds` in TU layout under `directory` using `ds.name` as file prefix.
void save_tu_dataset(const Dataset& ds, const std::filesystem::path& directory);

/// Sidecar file holding `graph_id class` records for a weighted edge file.
std::filesystem::path weighted_classes_path(const std::filesystem::path& edges_path);

/// Read whitespace-separated `graph_id u v w` records plus the sidecar class
/// file (`<path>.classes`). An optional `#n <int>` header fixes the vertex
/// count of every graph; otherwise each graph has 1 + its largest vertex index.
/// Graph order follows the class file.
Dataset load_weighted_graphs(const std::filesystem::path& path);

/// Inverse of load_weighted_graphs. Weights are written with 17 significant
/// digits so a save/load cycle reproduces every bit. Graphs without an id get
/// `g<index>`.
void save_weighted_graphs(const Dataset& ds, const std::filesystem::path& path);

}  // namespace dynfeat
