#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynfeat/classifier.hpp"
#include "dynfeat/data_view.hpp"
#include "dynfeat/features.hpp"
#include "dynfeat/matrix.hpp"
#include "dynfeat/random.hpp"

namespace dynfeat {

/// Fold id (0..folds-1) per sample. Each class is shuffled and dealt
/// round-robin, the deal continuing across classes, so fold sizes differ by
/// at most one and class proportions are as even as the counts allow.
std::vector<int> stratified_folds(std::span<const int> y, int folds, Rng& rng);

/// Pooled accuracy of `spec` with a fixed hyperparameter under single
/// stratified k-fold (k clipped to the sample count); each fold standardizes
/// with its own training statistics when `standardize` is set.
double inner_cv_accuracy(const Matrix& x, std::span<const int> y, int classes,
                         const ModelSpec& spec, double hyper, int folds, std::uint64_t seed,
                         bool standardize = true);

struct CvOptions {
  int folds = 10;
  int repeats = 10;
  int inner_folds = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool standardize = true;
  /// Attribute group of every column. When non-empty, each outer fold runs
  /// greedy forward group selection on its training rows first.
  std::vector<std::string> column_groups;
  /// Keep per-fold row access counters in the report.
  bool audit = false;
};

struct CVReport {
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // population std of the per-repeat means
  std::vector<double> per_repeat_accuracies;
  std::vector<std::vector<double>> fold_accuracies;     // [repeat][fold]
  std::vector<std::vector<double>> chosen_hyperparams;  // [repeat][fold]
  std::vector<std::vector<std::vector<std::string>>> selected_groups;  // [repeat][fold]
  double runtime_seconds = 0.0;
  std::vector<FoldAudit> audits;  // repeat-major, when requested
};

/// Repeated stratified k-fold evaluation.
///
/// For each repeat r the fold assignment is drawn from (seed, r). In every
/// outer fold the hyperparameter is chosen by inner stratified CV on the
/// training rows only (ties to the earlier grid value), the standardizer is
/// fit on the training rows only, and the model trained with the chosen value
/// predicts the held-out fold. A repeat's accuracy is the mean over its folds.
///
/// Throws ArgumentError when there are fewer samples than folds.
CVReport cross_validate(const Matrix& x, std::span<const int> y, const ModelSpec& spec,
                        const CvOptions& opts);
CVReport cross_validate(const FeatureMatrix& fm, const ModelSpec& spec, const CvOptions& opts);

inline constexpr const char* kReportCsvHeader = "dataset,model,mean_acc,std_acc,seconds";

/// `dataset,model,mean_acc,std_acc,seconds` row; with `timing = false` the
/// seconds field is written as NA so reruns are byte-identical.
std::string format_report_row(const std::string& dataset, ModelKind model,
                              const CVReport& report, bool timing = true);

}  // namespace dynfeat
