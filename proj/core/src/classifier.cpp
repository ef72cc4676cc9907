#include "dynfeat/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynfeat/errors.hpp"

namespace dynfeat {

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::linear_svm ? "svm" : "rf";
}

std::vector<double> ModelSpec::grid() const {
  if (kind == ModelKind::linear_svm) return c_grid;
  return {trees_grid.begin(), trees_grid.end()};
}

void ModelSpec::validate() const {
  if (kind == ModelKind::linear_svm) {
    if (c_grid.empty()) throw ArgumentError("empty C grid");
    for (double c : c_grid) {
      if (!(c > 0.0)) throw ArgumentError("C values must be positive");
    }
  } else {
    if (trees_grid.empty()) throw ArgumentError("empty trees grid");
    for (int t : trees_grid) {
      if (t < 1) throw ArgumentError("tree counts must be positive");
    }
  }
}

OneVsRest OneVsRest::train(const Matrix& x, std::span<const int> y, int classes,
                           const BinaryTrainer& trainer) {
  if (classes < 2) throw ArgumentError("classification needs at least two classes");
  OneVsRest out;
  out.classes_ = classes;
  out.present_.assign(static_cast<std::size_t>(classes), false);
  for (int v : y) {
    if (v < 0 || v >= classes) throw ArgumentError("class label out of range");
    out.present_[static_cast<std::size_t>(v)] = true;
  }
  const auto seen = std::count(out.present_.begin(), out.present_.end(), true);
  if (seen == 0) throw ArgumentError("no training samples");
  if (seen == 1) {
    out.constant_ = static_cast<int>(std::find(out.present_.begin(), out.present_.end(), true) -
                                     out.present_.begin());
    return out;
  }
  std::vector<int> signs(y.size());
  if (classes == 2) {
    for (std::size_t i = 0; i < y.size(); ++i) signs[i] = y[i] == 1 ? 1 : -1;
    out.models_.push_back(trainer(x, signs));
    return out;
  }
  out.models_.resize(static_cast<std::size_t>(classes));
  for (int c = 0; c < classes; ++c) {
    if (!out.present_[static_cast<std::size_t>(c)]) continue;
    for (std::size_t i = 0; i < y.size(); ++i) signs[i] = y[i] == c ? 1 : -1;
    out.models_[static_cast<std::size_t>(c)] = trainer(x, signs);
  }
  return out;
}

std::vector<double> OneVsRest::scores(std::span<const double> x) const {
  std::vector<double> s(static_cast<std::size_t>(classes_), -std::numeric_limits<double>::infinity());
  if (constant_ >= 0) {
    s[static_cast<std::size_t>(constant_)] = 0.0;
  } else if (classes_ == 2) {
    const double d = models_.front().decision(x);
    s[0] = -d;
    s[1] = d;
  } else {
    for (std::size_t c = 0; c < models_.size(); ++c) {
      if (present_[c]) s[c] = models_[c].decision(x);
    }
  }
  return s;
}

int OneVsRest::predict(std::span<const double> x) const {
  if (constant_ >= 0) return constant_;
  if (classes_ == 2) return models_.front().decision(x) > 0.0 ? 1 : 0;
  const auto s = scores(x);
  return static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
}

int TrainedModel::predict(std::span<const double> x) const {
  return std::visit([&](const auto& m) { return m.predict(x); }, model_);
}

TrainedModel train_model(const Matrix& x, std::span<const int> y, int classes,
                         const ModelSpec& spec, double hyper, std::uint64_t seed) {
  if (spec.kind == ModelKind::linear_svm) {
    SvmOptions opts;
    opts.C = hyper;
    opts.seed = seed;
    return TrainedModel(OneVsRest::train(x, y, classes, [&](const Matrix& m, std::span<const int> s) {
      return train_linear_svm(m, s, opts);
    }));
  }
  ForestOptions opts;
  opts.trees = static_cast<int>(std::lround(hyper));
  opts.seed = seed;
  return TrainedModel(train_random_forest(x, y, classes, opts));
}

}  // namespace dynfeat
