#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dynfeat/classifier.hpp"
#include "dynfeat/cross_validation.hpp"
#include "dynfeat/errors.hpp"
#include "dynfeat/forest.hpp"
#include "dynfeat/svm.hpp"

using namespace dynfeat;

namespace {

struct Blobs {
  Matrix x;
  std::vector<int> y;
};

// Isotropic unit Gaussians centered on `centers`.
Blobs blobs(const std::vector<std::vector<double>>& centers, std::size_t per_class, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  const std::size_t dim = centers.front().size();
  Blobs b{Matrix(per_class * centers.size(), dim), {}};
  for (std::size_t i = 0; i < b.x.rows(); ++i) {
    const std::size_t c = i % centers.size();
    for (std::size_t j = 0; j < dim; ++j) b.x(i, j) = centers[c][j] + noise(gen);
    b.y.push_back(static_cast<int>(c));
  }
  return b;
}

std::vector<int> to_signed(const std::vector<int>& y) {
  std::vector<int> s;
  for (int c : y) s.push_back(c == 1 ? 1 : -1);
  return s;
}

template <typename Model>
double accuracy(const Model& m, const Blobs& b) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < b.x.rows(); ++i) ok += m.predict(b.x.row(i)) == b.y[i];
  return static_cast<double>(ok) / static_cast<double>(b.x.rows());
}

}  // namespace

TEST_SUITE("svm") {
  TEST_CASE("two separable points") {
    Matrix x(2, 2);
    x(0, 0) = 1;
    x(1, 0) = -1;
    const std::vector<int> y{1, -1};
    const auto m = train_linear_svm(x, y, {});
    CHECK(m.decision(x.row(0)) > 0);
    CHECK(m.decision(x.row(1)) < 0);

    const std::vector<int> flipped{-1, 1};
    const auto f = train_linear_svm(x, flipped, {});
    for (std::size_t j = 0; j < 2; ++j) CHECK(f.weights[j] == doctest::Approx(-m.weights[j]));
    CHECK(f.bias == doctest::Approx(-m.bias));
  }

  TEST_CASE("separable gaussian blobs with margin 2") {
    // Gaussian points labeled by a known separator; points within distance 1
    // of it are rejected, leaving a gap of width 2.
    auto sample = [](std::size_t n, std::uint64_t seed) {
      std::mt19937_64 gen(seed);
      std::normal_distribution<double> noise(0.0, 3.0);
      const double s = 1.0 / std::sqrt(2.0);
      Blobs b{Matrix(n, 2), {}};
      for (std::size_t i = 0; i < n;) {
        const double x0 = noise(gen);
        const double x1 = noise(gen);
        const double side = s * x0 + s * x1 - 0.5;
        if (std::abs(side) < 1.0) continue;
        b.x(i, 0) = x0;
        b.x(i, 1) = x1;
        b.y.push_back(side > 0 ? 1 : 0);
        ++i;
      }
      return b;
    };
    const auto train = sample(200, 1);
    const auto test = sample(2000, 2);
    const auto m = train_linear_svm(train.x, to_signed(train.y), {});
    std::size_t ok = 0;
    for (std::size_t i = 0; i < test.x.rows(); ++i) ok += (m.decision(test.x.row(i)) > 0) == (test.y[i] == 1);
    CHECK(static_cast<double>(ok) / 2000.0 >= 0.98);
  }

  TEST_CASE("duality gap and dual ascent") {
    const auto b = blobs({{0, 0, 0}, {1, 1, 0}}, 60, 3);
    for (double c : {0.01, 1.0, 100.0}) {
      SvmOptions opts;
      opts.C = c;
      SvmTrace trace;
      train_linear_svm(b.x, to_signed(b.y), opts, &trace);
      REQUIRE(trace.epochs > 0);
      REQUIRE(trace.dual.size() == static_cast<std::size_t>(trace.epochs));
      for (std::size_t e = 1; e < trace.dual.size(); ++e) CHECK(trace.dual[e] >= trace.dual[e - 1] - 1e-9 * std::abs(trace.dual[e]));
      for (std::size_t e = 0; e < trace.dual.size(); ++e) CHECK(trace.primal[e] >= trace.dual[e] - 1e-9);
      if (trace.converged) {
        CHECK((trace.primal.back() - trace.dual.back()) / (c * 120.0) <= 1e-4);
      }
      CHECK(trace.primal.back() <= trace.primal.front() + 1e-9);
    }
  }

  TEST_CASE("determinism and errors") {
    const auto b = blobs({{0, 0}, {1, 1}}, 30, 4);
    SvmOptions opts;
    opts.seed = 9;
    const auto m1 = train_linear_svm(b.x, to_signed(b.y), opts);
    const auto m2 = train_linear_svm(b.x, to_signed(b.y), opts);
    CHECK(m1.weights == m2.weights);
    CHECK(m1.bias == m2.bias);
    CHECK_THROWS_AS(train_linear_svm(b.x, std::vector<int>(60, 1), opts), DegenerateError);
    CHECK_THROWS_AS(train_linear_svm(b.x, std::vector<int>(60, 0), opts), ArgumentError);
    opts.C = 0;
    CHECK_THROWS_AS(train_linear_svm(b.x, to_signed(b.y), opts), ArgumentError);
  }
}

TEST_SUITE("forest") {
  TEST_CASE("single tree on a pure split") {
    Matrix x(8, 1);
    std::vector<int> y(8);
    for (std::size_t i = 0; i < 8; ++i) {
      x(i, 0) = static_cast<double>(i) - 3.5;
      y[i] = x(i, 0) < 0 ? 0 : 1;
    }
    ForestOptions opts;
    opts.trees = 1;
    const auto f = train_random_forest(x, y, 2, opts);
    // A single bootstrap may miss rows, but whatever it saw it separates at 0.
    CHECK(f.predict(std::vector<double>{-3.0}) == 0);
    CHECK(f.predict(std::vector<double>{3.0}) == 1);
  }

  TEST_CASE("xor with 100 trees") {
    Matrix x(4, 2);
    const std::vector<int> y{0, 1, 1, 0};
    x(1, 1) = 1;
    x(2, 0) = 1;
    x(3, 0) = 1;
    x(3, 1) = 1;
    ForestOptions opts;
    opts.trees = 100;
    opts.seed = 3;
    const auto f = train_random_forest(x, y, 2, opts);
    for (std::size_t i = 0; i < 4; ++i) CHECK(f.predict(x.row(i)) == y[i]);
  }

  TEST_CASE("determinism") {
    const auto b = blobs({{0, 0, 0}, {1, 0, 1}, {0, 1, 1}}, 40, 5);
    ForestOptions opts;
    opts.trees = 30;
    opts.seed = 17;
    const auto f1 = train_random_forest(b.x, b.y, 3, opts);
    const auto f2 = train_random_forest(b.x, b.y, 3, opts);
    const auto probe = blobs({{0, 0, 0}}, 200, 6);
    for (std::size_t i = 0; i < probe.x.rows(); ++i) CHECK(f1.predict(probe.x.row(i)) == f2.predict(probe.x.row(i)));
  }

  TEST_CASE("bootstrap in-bag fraction") {
    const auto b = blobs({{0, 0}, {2, 2}}, 25, 7);
    ForestOptions opts;
    opts.trees = 400;
    const auto f = train_random_forest(b.x, b.y, 2, opts);
    double in_bag = 0.0;
    for (const auto& t : f.trees()) {
      CHECK(t.out_of_bag > 0);
      in_bag += 1.0 - static_cast<double>(t.out_of_bag) / 50.0;
    }
    in_bag /= 400.0;
    CHECK(std::abs(in_bag - (1.0 - std::exp(-1.0))) <= 0.05);
  }

  TEST_CASE("vote ties go to the lower class") {
    // Two stumps disagreeing everywhere: one votes 1, one votes 0.
    DecisionTree a;
    a.nodes = {{-1, 0.0, -1, -1, 1}};
    DecisionTree b;
    b.nodes = {{-1, 0.0, -1, -1, 0}};
    const RandomForest f({a, b}, 2);
    CHECK(f.predict(std::vector<double>{0.0}) == 0);
  }
}

TEST_SUITE("multiclass") {
  TEST_CASE("two classes match the raw binary trainer") {
    const auto b = blobs({{0, 0}, {1.5, 0.5}}, 50, 8);
    SvmOptions opts;
    const BinaryTrainer trainer = [&](const Matrix& x, std::span<const int> y) {
      return train_linear_svm(x, y, opts);
    };
    const auto ovr = OneVsRest::train(b.x, b.y, 2, trainer);
    const auto raw = train_linear_svm(b.x, to_signed(b.y), opts);
    const auto probe = blobs({{0.7, 0.2}}, 300, 9);
    for (std::size_t i = 0; i < probe.x.rows(); ++i)
      CHECK(ovr.predict(probe.x.row(i)) == (raw.decision(probe.x.row(i)) > 0 ? 1 : 0));
  }

  TEST_CASE("three separated blobs") {
    const std::vector<std::vector<double>> centers{{0, 0}, {8, 0}, {0, 8}};
    const auto train = blobs(centers, 60, 10);
    const auto test = blobs(centers, 300, 11);
    const auto m = train_model(train.x, train.y, 3, ModelSpec::svm(), 1.0, 0);
    CHECK(accuracy(m, test) >= 0.98);
    const auto rf = train_model(train.x, train.y, 3, ModelSpec::forest(), 50, 0);
    CHECK(accuracy(rf, test) >= 0.98);
  }

  TEST_CASE("all-tie scores pick class 0") {
    Matrix x(3, 1);
    const std::vector<int> y{0, 1, 2};
    const BinaryTrainer zero = [](const Matrix& m, std::span<const int>) {
      return LinearModel{std::vector<double>(m.cols(), 0.0), 0.0};
    };
    const auto ovr = OneVsRest::train(x, y, 3, zero);
    CHECK(ovr.predict(std::vector<double>{1.0}) == 0);
  }

  TEST_CASE("model spec") {
    CHECK(ModelSpec::svm().grid().size() == 7);
    CHECK(ModelSpec::forest().grid() == std::vector<double>{50, 100, 200, 500});
    ModelSpec bad;
    bad.c_grid.clear();
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
  }
}

TEST_SUITE("cross-validation") {
  TEST_CASE("stratified folds") {
    std::vector<int> y;
    for (int i = 0; i < 53; ++i) y.push_back(i % 5 == 0 ? 1 : (i % 7 == 0 ? 2 : 0));
    Rng rng(1);
    const auto folds = stratified_folds(y, 10, rng);
    std::vector<int> sizes(10, 0);
    std::map<std::pair<int, int>, int> per_class;
    for (std::size_t i = 0; i < y.size(); ++i) {
      ++sizes[folds[i]];
      ++per_class[{y[i], folds[i]}];
    }
    CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);
    for (int c = 0; c < 3; ++c) {
      int lo = 1000, hi = 0;
      for (int f = 0; f < 10; ++f) {
        lo = std::min(lo, per_class[{c, f}]);
        hi = std::max(hi, per_class[{c, f}]);
      }
      CHECK(hi - lo <= 1);
    }
    Rng again(1);
    CHECK(stratified_folds(y, 10, again) == folds);
    Rng r3(1);
    CHECK_THROWS_AS(stratified_folds(std::vector<int>{0, 1, 0}, 4, r3), ArgumentError);
  }

  TEST_CASE("separable features give perfect accuracy") {
    const auto b = blobs({{-20, 0}, {20, 0}}, 30, 12);
    CvOptions opts;
    const auto r = cross_validate(b.x, b.y, ModelSpec::svm(), opts);
    CHECK(r.mean_accuracy == 1.0);
    CHECK(r.std_accuracy == 0.0);
    CHECK(r.per_repeat_accuracies.size() == 10);
    CHECK(r.chosen_hyperparams.size() == 10);
    CHECK(r.chosen_hyperparams[0].size() == 10);
  }

  TEST_CASE("pure noise stays near chance") {
    const auto b = blobs({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}, 250, 13);
    CvOptions opts;
    opts.jobs = 4;
    const auto r = cross_validate(b.x, b.y, ModelSpec::svm(), opts);
    CHECK(std::abs(r.mean_accuracy - 0.5) <= 0.07);
  }

  TEST_CASE("determinism across jobs and reruns") {
    const auto b = blobs({{0, 0}, {1, 0.5}}, 40, 14);
    CvOptions opts;
    opts.repeats = 3;
    opts.seed = 5;
    ModelSpec spec = ModelSpec::forest();
    spec.trees_grid = {5, 10};
    const auto a = cross_validate(b.x, b.y, spec, opts);
    opts.jobs = 3;
    const auto c = cross_validate(b.x, b.y, spec, opts);
    CHECK(a.fold_accuracies == c.fold_accuracies);
    CHECK(a.chosen_hyperparams == c.chosen_hyperparams);
    CHECK(format_report_row("d", spec.kind, a, false) == format_report_row("d", spec.kind, c, false));
    CHECK(format_report_row("d", spec.kind, a, false).ends_with(",NA"));
  }

  TEST_CASE("constant shift leaves accuracy unchanged") {
    auto b = blobs({{0, 0, 0}, {0.8, 0.4, 0}}, 40, 15);
    // Round to multiples of 1/64 so the shifted values are exact.
    for (std::size_t i = 0; i < b.x.rows(); ++i)
      for (auto& v : b.x.row(i)) v = std::round(v * 64.0) / 64.0;
    CvOptions opts;
    opts.repeats = 3;
    const auto base = cross_validate(b.x, b.y, ModelSpec::svm(), opts);
    for (std::size_t i = 0; i < b.x.rows(); ++i)
      for (auto& v : b.x.row(i)) v += 256.0;
    const auto shifted = cross_validate(b.x, b.y, ModelSpec::svm(), opts);
    CHECK(base.fold_accuracies == shifted.fold_accuracies);
  }

  TEST_CASE("audit: no test-row access outside prediction") {
    const auto b = blobs({{0, 0}, {1, 1}}, 30, 16);
    CvOptions opts;
    opts.repeats = 2;
    opts.folds = 5;
    opts.audit = true;
    opts.column_groups = {"deg", "clust"};
    const auto r = cross_validate(b.x, b.y, ModelSpec::svm(), opts);
    REQUIRE(r.audits.size() == 10);
    for (const auto& audit : r.audits) {
      std::vector<bool> is_test(60, false);
      for (auto i : audit.test_rows) is_test[i] = true;
      for (auto phase : {AccessPhase::standardizer_fit, AccessPhase::model_selection,
                         AccessPhase::feature_selection, AccessPhase::final_training}) {
        const auto& counts = audit.counts(phase);
        for (std::size_t i = 0; i < 60; ++i) {
          if (is_test[i]) CHECK(counts[i] == 0);
          else CHECK(counts[i] > 0);
        }
      }
      const auto& pred = audit.counts(AccessPhase::prediction);
      for (std::size_t i = 0; i < 60; ++i) CHECK(pred[i] == (is_test[i] ? 1u : 0u));
    }
  }

  TEST_CASE("argument errors") {
    const auto b = blobs({{0}, {1}}, 4, 17);
    CvOptions opts;
    CHECK_THROWS_AS(cross_validate(b.x, b.y, ModelSpec::svm(), opts), ArgumentError);
    opts.folds = 2;
    opts.repeats = 0;
    CHECK_THROWS_AS(cross_validate(b.x, b.y, ModelSpec::svm(), opts), ArgumentError);
  }
}
