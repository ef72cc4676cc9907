#include <algorithm>
#include <fstream>
#include <sstream>

#include "dynfeat/errors.hpp"
#include "dynfeat/features.hpp"

namespace dynfeat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    const auto item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

bool parse_bool(std::string_view value, std::size_t line_no) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw FormatError("config line " + std::to_string(line_no) + ": expected true/false, got '" +
                    std::string(value) + "'");
}

}  // namespace

FeatureConfig parse_feature_config(std::string_view text) {
  struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    entries.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                       line_no});
  }

  FeatureConfig cfg = FeatureConfig::bioinformatics();
  // The preset provides the baseline regardless of where it appears.
  for (const auto& e : entries) {
    if (e.key != "preset") continue;
    if (e.value == "bio") {
      cfg = FeatureConfig::bioinformatics();
    } else if (e.value == "social") {
      cfg = FeatureConfig::social();
    } else {
      throw FormatError("config line " + std::to_string(e.line) + ": unknown preset '" + e.value +
                        "' (bio, social)");
    }
  }
  for (const auto& e : entries) {
    const auto bad = [&](const std::string& what) {
      throw FormatError("config line " + std::to_string(e.line) + ": " + what);
    };
    if (e.key == "preset") continue;
    if (e.key == "attributes") {
      cfg.attributes.clear();
      for (auto item : split_list(e.value)) {
        const auto kind = parse_attribute(item);
        if (!kind) bad("unknown attribute '" + std::string(item) + "'");
        cfg.attributes.push_back(*kind);
      }
      std::sort(cfg.attributes.begin(), cfg.attributes.end());
      cfg.attributes.erase(std::unique(cfg.attributes.begin(), cfg.attributes.end()),
                           cfg.attributes.end());
    } else if (e.key == "times") {
      std::vector<int> ts;
      for (auto item : split_list(e.value)) {
        try {
          std::size_t used = 0;
          const int t = std::stoi(std::string(item), &used);
          if (used != item.size()) throw std::invalid_argument("trailing");
          ts.push_back(t);
        } catch (const std::exception&) {
          bad("bad time value '" + std::string(item) + "'");
        }
      }
      try {
        cfg.ts = TimeGrid(std::move(ts));
      } catch (const ArgumentError& err) {
        bad(err.what());
      }
    } else if (e.key == "globals") {
      cfg.include_globals = parse_bool(e.value, e.line);
    } else if (e.key == "fixed_vertex") {
      cfg.fixed_vertex_mode = parse_bool(e.value, e.line);
    } else if (e.key == "vertex_features") {
      if (e.value == "append") {
        cfg.vertex_features = VertexFeatures::append;
      } else if (e.value == "replace") {
        cfg.vertex_features = VertexFeatures::replace;
      } else {
        bad("vertex_features must be append or replace");
      }
    } else if (e.key == "use_weights") {
      cfg.use_weights = parse_bool(e.value, e.line);
    } else if (e.key == "selection") {
      if (e.value == "all") {
        cfg.selection = Selection::all;
      } else if (e.value == "greedy_forward") {
        cfg.selection = Selection::greedy_forward;
      } else {
        bad("selection must be all or greedy_forward");
      }
    } else {
      bad("unknown key '" + e.key + "'");
    }
  }
  try {
    cfg.validate();
  } catch (const ArgumentError& err) {
    throw FormatError(std::string("config: ") + err.what());
  }
  return cfg;
}

FeatureConfig load_feature_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_feature_config(ss.str());
}

std::string format_feature_config(const FeatureConfig& cfg) {
  std::ostringstream out;
  out << "attributes = ";
  for (std::size_t i = 0; i < cfg.attributes.size(); ++i) {
    out << (i ? ", " : "") << attribute_key(cfg.attributes[i]);
  }
  out << "\ntimes = ";
  for (std::size_t i = 0; i < cfg.ts.size(); ++i) out << (i ? ", " : "") << cfg.ts.values()[i];
  out << "\nglobals = " << (cfg.include_globals ? "true" : "false")
      << "\nfixed_vertex = " << (cfg.fixed_vertex_mode ? "true" : "false")
      << "\nvertex_features = " << (cfg.vertex_features == VertexFeatures::append ? "append" : "replace")
      << "\nuse_weights = " << (cfg.use_weights ? "true" : "false")
      << "\nselection = " << (cfg.selection == Selection::all ? "all" : "greedy_forward") << '\n';
  return out.str();
}

}  // namespace dynfeat
