#include "dynfeat/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dynfeat/attributes.hpp"
#include "dynfeat/errors.hpp"
#include "dynfeat/parallel.hpp"
#include "dynfeat/spectral.hpp"
#include "dynfeat/walk_operator.hpp"

namespace dynfeat {

namespace {

struct AttributeNames {
  AttributeKind kind;
  std::string_view key;
  std::string_view prefix;
};

constexpr AttributeNames kNames[] = {
    {AttributeKind::degree, "degree", "deg"},
    {AttributeKind::second_eigenvector, "second_eigenvector", "eig2"},
    {AttributeKind::clustering, "clustering", "clust"},
    {AttributeKind::betweenness, "betweenness", "betw"},
    {AttributeKind::triangles, "triangles", "tri"},
    {AttributeKind::identity_partition, "identity_partition", "id"},
    {AttributeKind::node_labels, "node_labels", "lab"},
};

std::string time_column(std::string_view prefix, int t) {
  return std::string(prefix) + "@" + std::to_string(t);
}

void append(std::vector<double>& out, const std::vector<double>& values) {
  out.insert(out.end(), values.begin(), values.end());
}

}  // namespace

std::string_view attribute_key(AttributeKind kind) {
  return kNames[static_cast<int>(kind)].key;
}

std::string_view attribute_prefix(AttributeKind kind) {
  return kNames[static_cast<int>(kind)].prefix;
}

std::optional<AttributeKind> parse_attribute(std::string_view key) {
  for (const auto& n : kNames) {
    if (n.key == key) return n.kind;
  }
  return std::nullopt;
}

bool FeatureConfig::has(AttributeKind kind) const {
  return std::find(attributes.begin(), attributes.end(), kind) != attributes.end();
}

void FeatureConfig::validate() const {
  if (!std::is_sorted(attributes.begin(), attributes.end()) ||
      std::adjacent_find(attributes.begin(), attributes.end()) != attributes.end()) {
    throw ArgumentError("feature attributes must be distinct and in canonical order");
  }
  if (attributes.empty() && !include_globals && !fixed_vertex_mode) {
    throw ArgumentError("feature config selects no features");
  }
  if (ts.size() == 0 && (!attributes.empty() || fixed_vertex_mode)) {
    throw ArgumentError("feature config has an empty time grid");
  }
}

FeatureConfig FeatureConfig::bioinformatics() {
  FeatureConfig cfg;
  cfg.attributes = {AttributeKind::degree, AttributeKind::second_eigenvector,
                    AttributeKind::clustering, AttributeKind::identity_partition,
                    AttributeKind::node_labels};
  return cfg;
}

FeatureConfig FeatureConfig::social() {
  FeatureConfig cfg;
  cfg.attributes = {AttributeKind::degree,      AttributeKind::second_eigenvector,
                    AttributeKind::clustering,  AttributeKind::betweenness,
                    AttributeKind::triangles,   AttributeKind::identity_partition};
  return cfg;
}

std::vector<std::string> feature_columns(const FeatureConfig& cfg, std::size_t fixed_n) {
  std::vector<std::string> cols;
  const bool standard = !(cfg.fixed_vertex_mode && cfg.vertex_features == VertexFeatures::replace);
  if (standard) {
    for (auto kind : cfg.attributes) {
      for (int t : cfg.ts.values()) cols.push_back(time_column(attribute_prefix(kind), t));
    }
  }
  if (cfg.fixed_vertex_mode) {
    for (std::size_t k = 0; k < fixed_n; ++k) {
      for (int t : cfg.ts.values()) cols.push_back(time_column("v" + std::to_string(k), t));
    }
  }
  if (cfg.include_globals) {
    cols.emplace_back("num_nodes");
    cols.emplace_back("num_edges");
  }
  return cols;
}

FeatureVector graph_features(const Graph& g, const FeatureConfig& cfg,
                             const std::vector<NodeLabel>& universe) {
  FeatureVector fv;
  fv.graph_id = g.id();
  const auto& ts = cfg.ts;
  const bool standard = !(cfg.fixed_vertex_mode && cfg.vertex_features == VertexFeatures::replace);
  const bool needs_walk = g.vertex_count() > 0 &&
                          ((standard && !cfg.attributes.empty()) || cfg.fixed_vertex_mode);
  std::optional<WalkOperator> walk;
  if (needs_walk) walk.emplace(g, cfg.use_weights);

  auto zeros = [&] { return std::vector<double>(ts.size(), 0.0); };

  if (standard) {
    for (auto kind : cfg.attributes) {
      if (!walk) {
        append(fv.values, zeros());
        continue;
      }
      switch (kind) {
        case AttributeKind::degree:
          append(fv.values, numeric_assortativity(*walk, degree_attribute(*walk).numeric(), ts));
          break;
        case AttributeKind::second_eigenvector: {
          std::optional<SecondEigenpair> pair;
          if (g.vertex_count() >= 2) {
            try {
              pair = second_left_eigenvector(*walk);
            } catch (const ConvergenceError&) {
            }
          }
          if (pair) {
            append(fv.values, numeric_assortativity(*walk, pair->vector, ts));
          } else {
            append(fv.values, zeros());
          }
          if (!pair || pair->degenerate) {
            for (int t : ts.values()) fv.degenerate.insert(time_column("eig2", t));
          }
          break;
        }
        case AttributeKind::clustering:
          append(fv.values, numeric_assortativity(*walk, local_clustering(g).numeric(), ts));
          break;
        case AttributeKind::betweenness:
          append(fv.values, numeric_assortativity(*walk, betweenness(g).numeric(), ts));
          break;
        case AttributeKind::triangles:
          append(fv.values, numeric_assortativity(*walk, triangles_per_node(g).numeric(), ts));
          break;
        case AttributeKind::identity_partition:
          append(fv.values, identity_assortativity(*walk, ts));
          break;
        case AttributeKind::node_labels:
          append(fv.values,
                 categorical_assortativity(*walk, label_indicator(g, universe).indicator(), ts));
          break;
      }
    }
  }
  if (cfg.fixed_vertex_mode && walk) {
    for (const auto& row : vertex_autocovariances(*walk, ts)) append(fv.values, row);
  }
  if (cfg.include_globals) {
    fv.values.push_back(static_cast<double>(g.vertex_count()));
    fv.values.push_back(static_cast<double>(g.edge_count()));
  }
  for (double x : fv.values) {
    if (!std::isfinite(x)) throw std::logic_error("non-finite feature for graph " + g.id());
  }
  return fv;
}

namespace {

FeatureMatrix assemble(const Dataset& ds, const FeatureConfig& cfg, std::size_t fixed_n,
                       int jobs) {
  cfg.validate();
  if (cfg.has(AttributeKind::node_labels) && !ds.has_node_labels()) {
    throw ArgumentError("config requests node_labels but dataset '" + ds.name +
                        "' has no node labels");
  }
  FeatureMatrix fm;
  fm.column_names = feature_columns(cfg, fixed_n);
  fm.classes = ds.class_labels;
  fm.rows.resize(ds.size());
  parallel_for(ds.size(), jobs, [&](std::size_t i) {
    fm.rows[i] = graph_features(ds.graphs[i], cfg, ds.label_universe);
    if (fm.rows[i].graph_id.empty()) fm.rows[i].graph_id = std::to_string(i + 1);
  });
  return fm;
}

}  // namespace

FeatureMatrix extract_features(const Dataset& ds, const FeatureConfig& cfg, int jobs) {
  if (cfg.fixed_vertex_mode) return extract_fixed_vertex_features(ds, cfg, jobs);
  return assemble(ds, cfg, 0, jobs);
}

FeatureMatrix extract_fixed_vertex_features(const Dataset& ds, const FeatureConfig& cfg,
                                            int jobs) {
  if (!cfg.fixed_vertex_mode) throw ArgumentError("fixed-vertex extraction needs fixed_vertex = true");
  const std::size_t n = ds.graphs.empty() ? 0 : ds.graphs.front().vertex_count();
  for (const auto& g : ds.graphs) {
    if (g.vertex_count() != n) {
      throw ArgumentError("fixed-vertex mode needs equal vertex counts; graph '" + g.id() +
                          "' has " + std::to_string(g.vertex_count()) + ", expected " +
                          std::to_string(n));
    }
  }
  return assemble(ds, cfg, n, jobs);
}

Matrix FeatureMatrix::to_matrix() const {
  Matrix m(rows.size(), column_names.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].values.begin(), rows[i].values.end(), m.row(i).begin());
  }
  return m;
}

std::string column_group(std::string_view column) {
  const auto at = column.find('@');
  if (at == std::string_view::npos) return "globals";
  const auto prefix = column.substr(0, at);
  if (prefix.size() > 1 && prefix[0] == 'v' &&
      std::all_of(prefix.begin() + 1, prefix.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return "vertex";
  }
  return std::string(prefix);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string format_value(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

std::string to_csv(const FeatureMatrix& fm) {
  std::string out = "graph_id,class";
  for (const auto& c : fm.column_names) {
    out += ',';
    out += c;
  }
  out += '\n';
  for (std::size_t i = 0; i < fm.rows.size(); ++i) {
    out += fm.rows[i].graph_id;
    out += ',';
    out += std::to_string(fm.classes[i]);
    for (double x : fm.rows[i].values) {
      if (!std::isfinite(x)) throw FormatError("refusing to export non-finite feature value");
      out += ',';
      out += format_value(x);
    }
    out += '\n';
  }
  return out;
}

void export_csv(const FeatureMatrix& fm, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << to_csv(fm);
  if (!out) throw FormatError("failed writing " + path.string());
}

FeatureMatrix parse_csv(std::string_view text) {
  FeatureMatrix fm;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header = true;
  auto fail = [&](const std::string& msg) {
    throw FormatError("csv line " + std::to_string(line_no) + ": " + msg);
  };
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (header) {
      if (fields.size() < 2 || fields[0] != "graph_id" || fields[1] != "class") {
        fail("header must start with graph_id,class");
      }
      for (std::size_t k = 2; k < fields.size(); ++k) fm.column_names.emplace_back(fields[k]);
      header = false;
      continue;
    }
    if (fields.size() != fm.column_names.size() + 2) {
      fail("expected " + std::to_string(fm.column_names.size() + 2) + " fields, got " +
           std::to_string(fields.size()));
    }
    FeatureVector fv;
    fv.graph_id = std::string(fields[0]);
    int cls = 0;
    auto [p, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), cls);
    if (ec != std::errc() || p != fields[1].data() + fields[1].size()) fail("bad class value");
    for (std::size_t k = 2; k < fields.size(); ++k) {
      double x = 0.0;
      auto [q, ec2] = std::from_chars(fields[k].data(), fields[k].data() + fields[k].size(), x);
      if (ec2 != std::errc() || q != fields[k].data() + fields[k].size() || !std::isfinite(x)) {
        fail("bad value '" + std::string(fields[k]) + "'");
      }
      fv.values.push_back(x);
    }
    fm.rows.push_back(std::move(fv));
    fm.classes.push_back(cls);
  }
  if (header) fail("missing header");
  return fm;
}

FeatureMatrix import_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace dynfeat
