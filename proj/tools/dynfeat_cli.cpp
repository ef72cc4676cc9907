#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dynfeat/cross_validation.hpp"
#include "dynfeat/demo.hpp"
#include "dynfeat/errors.hpp"
#include "dynfeat/features.hpp"
#include "dynfeat/generators.hpp"
#include "dynfeat/io.hpp"
#include "dynfeat/parallel.hpp"

namespace fs = std::filesystem;
using namespace dynfeat;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kData = 3, kNumeric = 4 };

struct DatasetArgs {
  std::string dir;
  std::string name;
  std::string weighted;
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
  cmd->add_option("--dataset-dir", args.dir,
                  "Directory holding TU datasets (falls back to $DYNFEAT_DATA_DIR)");
  cmd->add_option("--name", args.name, "TU dataset name, e.g. MUTAG");
  cmd->add_option("--weighted", args.weighted,
                  "Weighted edge file (`graph_id u v w` records, sidecar <file>.classes)");
}

Dataset load_dataset(const DatasetArgs& args) {
  if (!args.weighted.empty()) return load_weighted_graphs(args.weighted);
  if (args.name.empty()) throw ArgumentError("either --name or --weighted is required");
  fs::path dir = args.dir;
  if (dir.empty()) {
    const char* env = std::getenv("DYNFEAT_DATA_DIR");
    if (!env) throw ArgumentError("no --dataset-dir given and DYNFEAT_DATA_DIR is unset");
    dir = env;
  }
  // Accept both <dir>/<name>/<name>_A.txt and <dir>/<name>_A.txt.
  if (fs::exists(dir / args.name / (args.name + "_A.txt"))) dir /= args.name;
  return load_tu_dataset(dir, args.name);
}

struct ConfigArgs {
  std::string path;
  std::string preset = "bio";
  bool fixed_vertex = false;
  bool no_labels = false;
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
  cmd->add_option("--config", args.path,
                  "Feature config file of `key = value` lines. Keys: preset (bio|social), "
                  "attributes (degree, second_eigenvector, clustering, betweenness, triangles, "
                  "identity_partition, node_labels), times, globals, fixed_vertex, "
                  "vertex_features (append|replace), use_weights, selection (all|greedy_forward)");
  cmd->add_option("--preset", args.preset, "Preset used without --config")
      ->check(CLI::IsMember({"bio", "social"}));
  cmd->add_flag("--fixed-vertex", args.fixed_vertex, "Add per-vertex one-hot features");
  cmd->add_flag("--no-labels", args.no_labels, "Drop the node-label attribute");
}

FeatureConfig load_config(const ConfigArgs& args) {
  FeatureConfig cfg = args.path.empty()
                          ? (args.preset == "social" ? FeatureConfig::social()
                                                     : FeatureConfig::bioinformatics())
                          : load_feature_config(args.path);
  if (args.fixed_vertex) cfg.fixed_vertex_mode = true;
  if (args.no_labels) std::erase(cfg.attributes, AttributeKind::node_labels);
  cfg.validate();
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw FormatError("failed writing " + path);
}

void print_table(const std::string& dataset, ModelKind model, const CVReport& r) {
  std::printf("%-20s %-6s %10s %10s %10s\n", "dataset", "model", "mean_acc", "std_acc", "seconds");
  std::printf("%-20s %-6s %9.2f%% %9.2f%% %10.2f\n", dataset.c_str(),
              std::string(to_string(model)).c_str(), 100.0 * r.mean_accuracy,
              100.0 * r.std_accuracy, r.runtime_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-walk assortativity features for graph classification"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  std::uint64_t seed = 0;
  std::string out;

  DatasetArgs stats_data;
  auto* stats = app.add_subcommand("stats", "Print dataset statistics as CSV");
  add_dataset_options(stats, stats_data);

  DatasetArgs extract_data;
  ConfigArgs extract_cfg;
  auto* extract = app.add_subcommand("extract", "Write the feature matrix as CSV");
  add_dataset_options(extract, extract_data);
  add_config_options(extract, extract_cfg);
  extract->add_option("--out", out, "Output CSV (stdout when omitted)");
  extract->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  DatasetArgs eval_data;
  ConfigArgs eval_cfg;
  std::string model_name = "svm";
  CvOptions cv;
  bool no_timing = false;
  auto* evaluate = app.add_subcommand("evaluate", "Repeated stratified cross-validation");
  add_dataset_options(evaluate, eval_data);
  add_config_options(evaluate, eval_cfg);
  evaluate->add_option("--model", model_name, "Classifier: svm or rf")
      ->check(CLI::IsMember({"svm", "rf"}));
  evaluate->add_option("--folds", cv.folds, "Outer folds")->check(CLI::Range(2, 1000));
  evaluate->add_option("--repeats", cv.repeats, "Repeats")->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", seed, "Seed for folds and models");
  evaluate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  evaluate->add_option("--out", out, "Report CSV (stdout when omitted)");
  evaluate->add_flag("--no-timing", no_timing, "Write NA for seconds so reruns are byte-identical");

  std::size_t fig_n = 30;
  int fig_tmax = 10;
  double fig_p = 0.4;
  auto* fig1 = app.add_subcommand("demo-fig1", "Assortativity of the second eigenvector vs time "
                                               "on six topologies");
  fig1->add_option("--n", fig_n, "Vertices per graph (multiple of 3)")->check(CLI::Range(3, 100000));
  fig1->add_option("--tmax", fig_tmax, "Last time step")->check(CLI::NonNegativeNumber);
  fig1->add_option("--p", fig_p, "Erdos-Renyi edge probability")->check(CLI::Range(0.0, 1.0));
  fig1->add_option("--seed", seed, "Erdos-Renyi seed");
  fig1->add_option("--out", out, "Output CSV (stdout when omitted)");

  std::string kind = "fixed_vertex";
  SyntheticParams params = fixed_vertex_params();
  std::optional<std::size_t> graphs_a, graphs_b, nodes, min_nodes;
  std::optional<double> p_in, p_out;
  std::optional<int> max_weight;
  auto* gen = app.add_subcommand("gen-synth", "Generate a synthetic two-class dataset");
  gen->add_option("--kind", kind, "fixed_vertex or planted_signal")
      ->check(CLI::IsMember({"fixed_vertex", "planted_signal"}));
  gen->add_option("--graphs-a", graphs_a, "Graphs in the planted-partition class");
  gen->add_option("--graphs-b", graphs_b, "Graphs in the Erdos-Renyi class");
  gen->add_option("--nodes", nodes, "Vertex count (largest, for variable sizes)");
  gen->add_option("--min-nodes", min_nodes, "Smallest vertex count");
  gen->add_option("--p-in", p_in, "Within-block edge probability");
  gen->add_option("--p-out", p_out, "Between-block edge probability");
  gen->add_option("--max-weight", max_weight, "Weights uniform in 1..max");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out, "Edge file; classes go to <out>.classes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*stats) {
      const auto ds = load_dataset(stats_data);
      std::cout << kStatsCsvHeader << '\n' << format_stats_csv(compute_stats(ds)) << '\n';
    } else if (*extract) {
      const auto ds = load_dataset(extract_data);
      const auto fm = extract_features(ds, load_config(extract_cfg), jobs);
      write_text(out, to_csv(fm));
    } else if (*evaluate) {
      const auto ds = load_dataset(eval_data);
      const auto cfg = load_config(eval_cfg);
      const auto fm = extract_features(ds, cfg, jobs);
      const auto model = model_name == "rf" ? ModelKind::random_forest : ModelKind::linear_svm;
      ModelSpec spec = model == ModelKind::linear_svm ? ModelSpec::svm() : ModelSpec::forest();
      spec.seed = seed;
      cv.seed = seed;
      cv.jobs = jobs;
      if (cfg.selection == Selection::greedy_forward) {
        for (const auto& c : fm.column_names) cv.column_groups.push_back(column_group(c));
      }
      const auto report = cross_validate(fm, spec, cv);
      print_table(ds.name, model, report);
      write_text(out, std::string(kReportCsvHeader) + "\n" +
                          format_report_row(ds.name, model, report, !no_timing) + "\n");
    } else if (*fig1) {
      write_text(out, format_curves_csv(topology_curves(fig_n, fig_tmax, fig_p, seed)));
    } else if (*gen) {
      if (kind == "planted_signal") params = planted_signal_params();
      if (graphs_a) params.graphs_a = *graphs_a;
      if (graphs_b) params.graphs_b = *graphs_b;
      if (nodes) params.nodes = *nodes;
      if (min_nodes) params.min_nodes = *min_nodes;
      if (nodes && !min_nodes && params.fixed_vertices) params.min_nodes = *nodes;
      if (p_in) params.p_in = *p_in;
      if (p_out) params.p_out = *p_out;
      if (max_weight) params.max_weight = *max_weight;
      save_weighted_graphs(generate_synthetic_dataset(params, seed), out);
    }
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (last residual " << e.last_residual() << ")\n";
    return kNumeric;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}
