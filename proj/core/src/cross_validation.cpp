#include "dynfeat/cross_validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "dynfeat/errors.hpp"
#include "dynfeat/parallel.hpp"
#include "dynfeat/selection.hpp"
#include "dynfeat/standardize.hpp"

namespace dynfeat {

std::vector<int> stratified_folds(std::span<const int> y, int folds, Rng& rng) {
  if (folds < 2) throw ArgumentError("need at least 2 folds");
  if (y.size() < static_cast<std::size_t>(folds)) {
    throw ArgumentError("cannot split " + std::to_string(y.size()) + " samples into " +
                        std::to_string(folds) + " folds");
  }
  const int classes = y.empty() ? 0 : *std::max_element(y.begin(), y.end()) + 1;
  std::vector<int> fold(y.size(), 0);
  std::size_t dealt = 0;
  for (int c = 0; c < classes; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == c) members.push_back(i);
    }
    rng.shuffle(std::span<std::size_t>(members));
    for (auto i : members) fold[i] = static_cast<int>(dealt++ % static_cast<std::size_t>(folds));
  }
  return fold;
}

namespace {

int class_count(std::span<const int> y) {
  return y.empty() ? 0 : *std::max_element(y.begin(), y.end()) + 1;
}

std::vector<int> gather_labels(std::span<const int> y, std::span<const std::size_t> idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(y[i]);
  return out;
}

// Standardizer restricted to `columns`.
Standardizer subset(const Standardizer& s, std::span<const std::size_t> columns) {
  std::vector<ColumnScaling> out;
  out.reserve(columns.size());
  for (auto c : columns) out.push_back(s.columns()[c]);
  return Standardizer(std::move(out));
}

}  // namespace

double inner_cv_accuracy(const Matrix& x, std::span<const int> y, int classes,
                         const ModelSpec& spec, double hyper, int folds, std::uint64_t seed,
                         bool standardize) {
  const int k = std::min<int>(folds, static_cast<int>(x.rows()));
  if (k < 2) throw ArgumentError("inner cross-validation needs at least 2 samples");
  Rng rng = Rng::derive(seed, 0x1cc);
  const auto fold = stratified_folds(y, k, rng);
  std::size_t correct = 0;
  for (int f = 0; f < k; ++f) {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
    for (std::size_t i = 0; i < x.rows(); ++i) (fold[i] == f ? test : train).push_back(i);
    Matrix xt = RowView(x, train).gather();
    Standardizer scaler;
    if (standardize) {
      scaler = Standardizer::fit(RowView(x, train));
      xt = scaler.transform(std::move(xt));
    }
    const auto yt = gather_labels(y, train);
    const auto model =
        train_model(xt, yt, classes, spec, hyper, Rng::derive(seed, 0x1cd, f).next());
    std::vector<double> row;
    for (auto i : test) {
      row.assign(x.row(i).begin(), x.row(i).end());
      if (standardize) scaler.transform(row);
      if (model.predict(row) == y[i]) ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(x.rows());
}

namespace {

struct FoldResult {
  double accuracy = 0.0;
  double hyper = 0.0;
  std::vector<std::string> groups;
};

FoldResult run_fold(const Matrix& x, std::span<const int> y, int classes, const ModelSpec& spec,
                    const CvOptions& opts, const std::vector<int>& fold_of, int repeat, int fold,
                    FoldAudit* audit) {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  for (std::size_t i = 0; i < x.rows(); ++i) (fold_of[i] == fold ? test : train).push_back(i);
  if (audit) audit->test_rows = test;
  const auto ytrain = gather_labels(y, train);
  const std::uint64_t fold_seed = Rng::derive(opts.seed, repeat, fold).next();

  FoldResult out;
  std::vector<std::size_t> columns(x.cols());
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  if (!opts.column_groups.empty()) {
    const auto groups = group_columns(opts.column_groups);
    const Matrix sel_data = RowView(x, train, audit, AccessPhase::feature_selection).gather();
    const auto chosen = greedy_forward_selection(sel_data, ytrain, classes, groups, spec,
                                                 opts.inner_folds, fold_seed);
    columns.clear();
    for (auto g : chosen) {
      columns.insert(columns.end(), groups[g].columns.begin(), groups[g].columns.end());
      out.groups.push_back(groups[g].name);
    }
    std::sort(columns.begin(), columns.end());
  }

  const auto grid = spec.grid();
  out.hyper = grid.front();
  if (grid.size() > 1) {
    const Matrix ms_data =
        RowView(x, train, audit, AccessPhase::model_selection).gather().select_columns(columns);
    double best = -1.0;
    for (double h : grid) {
      const double acc = inner_cv_accuracy(ms_data, ytrain, classes, spec, h, opts.inner_folds,
                                           fold_seed, opts.standardize);
      if (acc > best) {
        best = acc;
        out.hyper = h;
      }
    }
  }

  Standardizer scaler;
  if (opts.standardize) {
    scaler = subset(Standardizer::fit(RowView(x, train, audit, AccessPhase::standardizer_fit)),
                    columns);
  }
  Matrix xtrain =
      RowView(x, train, audit, AccessPhase::final_training).gather().select_columns(columns);
  if (opts.standardize) xtrain = scaler.transform(std::move(xtrain));
  const auto model = train_model(xtrain, ytrain, classes, spec, out.hyper,
                                 Rng::derive(fold_seed, 0x7a1).next());

  const RowView test_view(x, test, audit, AccessPhase::prediction);
  std::size_t correct = 0;
  std::vector<double> row(columns.size());
  for (std::size_t k = 0; k < test_view.size(); ++k) {
    const auto full = test_view.row(k);
    for (std::size_t c = 0; c < columns.size(); ++c) row[c] = full[columns[c]];
    if (opts.standardize) scaler.transform(row);
    if (model.predict(row) == y[test_view.index(k)]) ++correct;
  }
  out.accuracy = static_cast<double>(correct) / static_cast<double>(test.size());
  return out;
}

}  // namespace

CVReport cross_validate(const Matrix& x, std::span<const int> y, const ModelSpec& spec,
                        const CvOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  if (x.rows() != y.size()) throw ArgumentError("feature rows and labels differ in count");
  if (opts.repeats < 1) throw ArgumentError("need at least 1 repeat");
  if (opts.inner_folds < 2) throw ArgumentError("need at least 2 inner folds");
  if (!opts.column_groups.empty() && opts.column_groups.size() != x.cols()) {
    throw ArgumentError("column group count does not match column count");
  }
  const int classes = class_count(y);

  std::vector<std::vector<int>> assignment;
  for (int r = 0; r < opts.repeats; ++r) {
    Rng rng = Rng::derive(opts.seed, 0xf01d, r);
    assignment.push_back(stratified_folds(y, opts.folds, rng));
  }

  const auto tasks = static_cast<std::size_t>(opts.repeats) * static_cast<std::size_t>(opts.folds);
  std::vector<FoldResult> results(tasks);
  std::vector<FoldAudit> audits;
  if (opts.audit) {
    audits.assign(tasks, FoldAudit(x.rows()));
    for (std::size_t i = 0; i < tasks; ++i) {
      audits[i].repeat = static_cast<int>(i) / opts.folds;
      audits[i].fold = static_cast<int>(i) % opts.folds;
    }
  }
  parallel_for(tasks, opts.jobs, [&](std::size_t i) {
    const int r = static_cast<int>(i) / opts.folds;
    const int f = static_cast<int>(i) % opts.folds;
    results[i] = run_fold(x, y, classes, spec, opts, assignment[r], r, f,
                          opts.audit ? &audits[i] : nullptr);
  });

  CVReport report;
  for (int r = 0; r < opts.repeats; ++r) {
    std::vector<double> accs;
    std::vector<double> hypers;
    std::vector<std::vector<std::string>> groups;
    for (int f = 0; f < opts.folds; ++f) {
      auto& res = results[static_cast<std::size_t>(r * opts.folds + f)];
      accs.push_back(res.accuracy);
      hypers.push_back(res.hyper);
      groups.push_back(std::move(res.groups));
    }
    report.per_repeat_accuracies.push_back(std::accumulate(accs.begin(), accs.end(), 0.0) /
                                           static_cast<double>(accs.size()));
    report.fold_accuracies.push_back(std::move(accs));
    report.chosen_hyperparams.push_back(std::move(hypers));
    report.selected_groups.push_back(std::move(groups));
  }
  const auto& rep = report.per_repeat_accuracies;
  report.mean_accuracy = std::accumulate(rep.begin(), rep.end(), 0.0) / static_cast<double>(rep.size());
  double var = 0.0;
  for (double a : rep) var += (a - report.mean_accuracy) * (a - report.mean_accuracy);
  report.std_accuracy = std::sqrt(var / static_cast<double>(rep.size()));
  report.audits = std::move(audits);
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CVReport cross_validate(const FeatureMatrix& fm, const ModelSpec& spec, const CvOptions& opts) {
  return cross_validate(fm.to_matrix(), fm.classes, spec, opts);
}

std::string format_report_row(const std::string& dataset, ModelKind model,
                              const CVReport& report, bool timing) {
  char buf[128];
  if (timing) {
    std::snprintf(buf, sizeof buf, ",%.4f,%.4f,%.3f", report.mean_accuracy, report.std_accuracy,
                  report.runtime_seconds);
  } else {
    std::snprintf(buf, sizeof buf, ",%.4f,%.4f,NA", report.mean_accuracy, report.std_accuracy);
  }
  return dataset + "," + std::string(to_string(model)) + buf;
}

}  // namespace dynfeat
