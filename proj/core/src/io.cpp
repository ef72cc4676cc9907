#include "dynfeat/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dynfeat/errors.hpp"

namespace dynfeat {
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

/// Iterates the non-blank lines of a text buffer, tracking 1-based line numbers.
class LineReader {
 public:
  LineReader(std::string text, fs::path path) : text_(std::move(text)), path_(std::move(path)) {}

  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      const auto end = text_.find('\n', pos_);
      const auto stop = end == std::string::npos ? text_.size() : end;
      line = std::string_view(text_).substr(pos_, stop - pos_);
      pos_ = stop + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError(path_.filename().string() + ":" + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::string text_;
  fs::path path_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

/// Splits a line on commas and/or whitespace.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const auto start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, const LineReader& reader) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    reader.fail("cannot parse '" + std::string(field) + "' as a number");
  }
  return value;
}

std::vector<std::int64_t> read_int_column(const fs::path& path) {
  LineReader reader(read_file(path), path);
  std::vector<std::int64_t> out;
  std::string_view line;
  while (reader.next(line)) {
    const auto fields = split_fields(line);
    out.push_back(parse_number<std::int64_t>(fields.front(), reader));
  }
  return out;
}

std::vector<int> remap_sorted(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> distinct(values);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (auto v : values) {
    out.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) -
                                   distinct.begin()));
  }
  return out;
}

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace

Dataset load_tu_dataset(const fs::path& directory, const std::string& name) {
  const auto file = [&](const char* suffix) { return directory / (name + suffix); };
  for (const char* required : {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt"}) {
    if (!fs::exists(file(required))) {
      throw FormatError("missing mandatory file " + file(required).string());
    }
  }

  const auto indicator = read_int_column(file("_graph_indicator.txt"));
  const auto graph_labels = read_int_column(file("_graph_labels.txt"));
  const std::size_t num_graphs = graph_labels.size();

  // Vertex -> (graph index, local index).
  std::vector<std::size_t> graph_of(indicator.size());
  std::vector<std::size_t> local_of(indicator.size());
  std::vector<std::size_t> sizes(num_graphs, 0);
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    if (indicator[i] < 1 || static_cast<std::size_t>(indicator[i]) > num_graphs) {
      throw FormatError(file("_graph_indicator.txt").filename().string() + ":" +
                        std::to_string(i + 1) + ": graph id " + std::to_string(indicator[i]) +
                        " outside 1.." + std::to_string(num_graphs));
    }
    graph_of[i] = static_cast<std::size_t>(indicator[i] - 1);
    local_of[i] = sizes[graph_of[i]]++;
  }

  std::optional<std::vector<std::int64_t>> node_labels;
  if (fs::exists(file("_node_labels.txt"))) {
    node_labels = read_int_column(file("_node_labels.txt"));
    if (node_labels->size() != indicator.size()) {
      throw FormatError(file("_node_labels.txt").filename().string() + ": " +
                        std::to_string(node_labels->size()) + " labels for " +
                        std::to_string(indicator.size()) + " vertices");
    }
  }

  std::optional<LineReader> attr_reader;
  if (fs::exists(file("_edge_attributes.txt"))) {
    attr_reader.emplace(read_file(file("_edge_attributes.txt")), file("_edge_attributes.txt"));
  }

  std::vector<std::vector<Edge>> edges(num_graphs);
  std::unordered_set<std::uint64_t> seen;
  LineReader arcs(read_file(file("_A.txt")), file("_A.txt"));
  std::string_view line;
  while (arcs.next(line)) {
    const auto fields = split_fields(line);
    if (fields.size() != 2) arcs.fail("expected two vertex ids");
    const auto a = parse_number<std::int64_t>(fields[0], arcs);
    const auto b = parse_number<std::int64_t>(fields[1], arcs);
    const auto total = static_cast<std::int64_t>(indicator.size());
    if (a < 1 || b < 1 || a > total || b > total) {
      arcs.fail("vertex id outside 1.." + std::to_string(total));
    }
    const auto u = static_cast<std::size_t>(a - 1);
    const auto v = static_cast<std::size_t>(b - 1);
    if (graph_of[u] != graph_of[v]) {
      arcs.fail("arc joins vertices of graphs " + std::to_string(graph_of[u] + 1) + " and " +
                std::to_string(graph_of[v] + 1));
    }
    double weight = 1.0;
    if (attr_reader) {
      std::string_view attr_line;
      if (!attr_reader->next(attr_line)) attr_reader->fail("fewer edge attributes than arcs");
      weight = parse_number<double>(split_fields(attr_line).front(), *attr_reader);
      if (!(weight > 0.0) || !std::isfinite(weight)) {
        attr_reader->fail("non-positive edge attribute cannot be used as weight");
      }
    }
    if (u == v) continue;
    const auto g = graph_of[u];
    auto lu = local_of[u];
    auto lv = local_of[v];
    if (lu > lv) std::swap(lu, lv);
    if (seen.insert((static_cast<std::uint64_t>(u < v ? u : v) << 32) | (u < v ? v : u)).second) {
      edges[g].push_back({lu, lv, weight});
    }
  }

  Dataset ds;
  ds.name = name;
  ds.graphs.reserve(num_graphs);
  std::vector<std::vector<NodeLabel>> labels_per_graph;
  if (node_labels) {
    labels_per_graph.resize(num_graphs);
    for (std::size_t g = 0; g < num_graphs; ++g) labels_per_graph[g].reserve(sizes[g]);
    for (std::size_t i = 0; i < indicator.size(); ++i) {
      labels_per_graph[graph_of[i]].push_back((*node_labels)[i]);
    }
  }
  for (std::size_t g = 0; g < num_graphs; ++g) {
    std::optional<std::vector<NodeLabel>> labels;
    if (node_labels) labels = std::move(labels_per_graph[g]);
    ds.graphs.emplace_back(sizes[g], std::move(edges[g]), std::move(labels),
                           std::to_string(g + 1));
  }
  ds.class_labels = remap_sorted(graph_labels);
  ds.label_universe = collect_label_universe(ds.graphs);
  ds.validate();
  return ds;
}

void save_tu_dataset(const Dataset& ds, const fs::path& directory) {
  ds.validate();
  fs::create_directories(directory);
  const auto file = [&](const char* suffix) { return directory / (ds.name + suffix); };
  std::ofstream arcs(file("_A.txt"));
  std::ofstream indicator(file("_graph_indicator.txt"));
  std::ofstream classes(file("_graph_labels.txt"));
  const bool labeled = ds.has_node_labels();
  const bool weighted = std::any_of(ds.graphs.begin(), ds.graphs.end(),
                                    [](const Graph& g) { return g.is_weighted(); });
  std::ofstream node_labels;
  std::ofstream attrs;
  if (labeled) node_labels.open(file("_node_labels.txt"));
  if (weighted) attrs.open(file("_edge_attributes.txt"));

  std::size_t offset = 1;
  for (std::size_t g = 0; g < ds.size(); ++g) {
    const auto& graph = ds.graphs[g];
    for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
      indicator << g + 1 << '\n';
      if (labeled) node_labels << (*graph.node_labels())[i] << '\n';
    }
    for (const auto& e : graph.edges()) {
      arcs << e.u + offset << ", " << e.v + offset << '\n'
           << e.v + offset << ", " << e.u + offset << '\n';
      if (weighted) {
        const auto w = format_double(e.weight);
        attrs << w << '\n' << w << '\n';
      }
    }
    classes << ds.class_labels[g] << '\n';
    offset += graph.vertex_count();
  }
  for (auto* out : {&arcs, &indicator, &classes}) {
    if (!*out) throw FormatError("failed writing dataset files under " + directory.string());
  }
}

fs::path weighted_classes_path(const fs::path& edges_path) {
  return fs::path(edges_path.string() + ".classes");
}

Dataset load_weighted_graphs(const fs::path& path) {
  LineReader records(read_file(path), path);
  Dataset ds;
  ds.name = path.stem().string();

  struct Pending {
    std::vector<Edge> edges;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    std::size_t max_vertex = 0;
    bool any = false;
    std::optional<std::size_t> declared_n;
  };
  std::optional<std::size_t> global_n;
  std::unordered_map<std::string, Pending> pending;
  std::vector<std::string> appearance;

  std::string_view line;
  while (records.next(line)) {
    const auto fields = split_fields(line);
    if (fields.front() == "#n") {
      if (fields.size() == 2) {
        global_n = parse_number<std::size_t>(fields[1], records);
      } else if (fields.size() == 3) {
        auto [it, fresh] = pending.try_emplace(std::string(fields[1]));
        if (fresh) appearance.emplace_back(fields[1]);
        it->second.declared_n = parse_number<std::size_t>(fields[2], records);
      } else {
        records.fail("expected '#n <int>' or '#n <graph_id> <int>'");
      }
      continue;
    }
    if (fields.front().starts_with('#')) continue;
    if (fields.size() != 4) records.fail("expected 'graph_id u v w'");
    const auto u = parse_number<std::size_t>(fields[1], records);
    const auto v = parse_number<std::size_t>(fields[2], records);
    const auto w = parse_number<double>(fields[3], records);
    if (!(w > 0.0) || !std::isfinite(w)) records.fail("edge weight must be positive");
    if (u == v) records.fail("self-loop on vertex " + std::to_string(u));
    auto [it, fresh] = pending.try_emplace(std::string(fields[0]));
    if (fresh) appearance.emplace_back(fields[0]);
    auto& p = it->second;
    const auto key = std::minmax(u, v);
    if (!p.seen.emplace(key, true).second) {
      records.fail("duplicate edge (" + std::to_string(key.first) + "," +
                   std::to_string(key.second) + ") in graph " + std::string(fields[0]));
    }
    p.edges.push_back({key.first, key.second, w});
    p.max_vertex = std::max({p.max_vertex, u, v});
    p.any = true;
  }

  const auto classes_path = weighted_classes_path(path);
  std::vector<std::string> order;
  std::vector<std::int64_t> raw_classes;
  if (fs::exists(classes_path)) {
    LineReader classes(read_file(classes_path), classes_path);
    std::map<std::string, bool> listed;
    while (classes.next(line)) {
      const auto fields = split_fields(line);
      if (fields.size() != 2) classes.fail("expected 'graph_id class'");
      if (!listed.emplace(std::string(fields[0]), true).second) {
        classes.fail("graph " + std::string(fields[0]) + " listed twice");
      }
      order.emplace_back(fields[0]);
      raw_classes.push_back(parse_number<std::int64_t>(fields[1], classes));
    }
    for (const auto& id : appearance) {
      if (!listed.count(id)) {
        throw FormatError(classes_path.filename().string() + ": no class for graph " + id);
      }
    }
  } else if (!appearance.empty()) {
    throw FormatError("missing class file " + classes_path.string());
  }

  for (const auto& id : order) {
    auto it = pending.find(id);
    Pending empty;
    Pending& p = it == pending.end() ? empty : it->second;
    std::size_t n = p.declared_n ? *p.declared_n
                    : global_n   ? *global_n
                    : p.any      ? p.max_vertex + 1
                                 : 0;
    if (p.any && p.max_vertex >= n) {
      throw FormatError(path.filename().string() + ": graph " + id + " uses vertex " +
                        std::to_string(p.max_vertex) + " but declares " + std::to_string(n) +
                        " vertices");
    }
    ds.graphs.emplace_back(n, std::move(p.edges), std::nullopt, id);
  }
  ds.class_labels = remap_sorted(raw_classes);
  ds.validate();
  return ds;
}

void save_weighted_graphs(const Dataset& ds, const fs::path& path) {
  ds.validate();
  std::ofstream edges(path);
  std::ofstream classes(weighted_classes_path(path));
  if (!edges || !classes) throw FormatError("cannot write " + path.string());

  const bool uniform_n =
      !ds.graphs.empty() &&
      std::all_of(ds.graphs.begin(), ds.graphs.end(), [&](const Graph& g) {
        return g.vertex_count() == ds.graphs.front().vertex_count();
      });
  if (uniform_n) edges << "#n " << ds.graphs.front().vertex_count() << '\n';
  for (std::size_t g = 0; g < ds.size(); ++g) {
    const auto& graph = ds.graphs[g];
    const auto id = graph.id().empty() ? "g" + std::to_string(g) : graph.id();
    if (!uniform_n) edges << "#n " << id << ' ' << graph.vertex_count() << '\n';
    for (const auto& e : graph.edges()) {
      edges << id << ' ' << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
    }
    classes << id << ' ' << ds.class_labels[g] << '\n';
  }
}

}  // namespace dynfeat
