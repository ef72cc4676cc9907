#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dynfeat/forest.hpp"
#include "dynfeat/matrix.hpp"
#include "dynfeat/svm.hpp"

namespace dynfeat {

enum class ModelKind { linear_svm, random_forest };

std::string_view to_string(ModelKind kind);

/// Learner family plus its hyperparameter grid.
struct ModelSpec {
  ModelKind kind = ModelKind::linear_svm;
  std::vector<double> c_grid{1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
  std::vector<int> trees_grid{50, 100, 200, 500};
  std::uint64_t seed = 0;

  static ModelSpec svm() { return {}; }
  static ModelSpec forest() {
    ModelSpec s;
    s.kind = ModelKind::random_forest;
    return s;
  }

  /// Grid of the active learner as doubles (C values or tree counts).
  std::vector<double> grid() const;
  void validate() const;
};

/// Trains a +1/-1 linear scorer on (x, y).
using BinaryTrainer = std::function<LinearModel(const Matrix&, std::span<const int>)>;

/// Multi-class reduction over a binary linear trainer.
///
/// Two classes use a single scorer for "class 1 vs class 0" (score > 0 picks
/// class 1). More classes use one-vs-rest with argmax score, ties to the lower
/// class id. Classes absent from the training labels are never predicted; a
/// training set with one class present predicts that class.
class OneVsRest {
 public:
  OneVsRest() = default;
  static OneVsRest train(const Matrix& x, std::span<const int> y, int classes,
                         const BinaryTrainer& trainer);

  int predict(std::span<const double> x) const;
  /// Per-class scores; -inf for classes without a scorer.
  std::vector<double> scores(std::span<const double> x) const;

 private:
  int classes_ = 0;
  int constant_ = -1;  // >= 0 when only one class was seen
  std::vector<LinearModel> models_;
  std::vector<bool> present_;
};

/// A fitted learner of either family.
class TrainedModel {
 public:
  TrainedModel() = default;
  explicit TrainedModel(OneVsRest m) : model_(std::move(m)) {}
  explicit TrainedModel(RandomForest m) : model_(std::move(m)) {}

  int predict(std::span<const double> x) const;

 private:
  std::variant<OneVsRest, RandomForest> model_;
};

/// Fit `spec.kind` with one hyperparameter value (C or tree count).
TrainedModel train_model(const Matrix& x, std::span<const int> y, int classes,
                         const ModelSpec& spec, double hyper, std::uint64_t seed);

}  // namespace dynfeat
