#include "dynfeat/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dynfeat/errors.hpp"
#include "dynfeat/random.hpp"

namespace dynfeat {

int DecisionTree::predict(std::span<const double> x) const {
  int at = 0;
  while (nodes[static_cast<std::size_t>(at)].feature >= 0) {
    const auto& node = nodes[static_cast<std::size_t>(at)];
    at = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right;
  }
  return nodes[static_cast<std::size_t>(at)].label;
}

int RandomForest::predict(std::span<const double> x) const {
  std::vector<int> votes(static_cast<std::size_t>(classes_), 0);
  for (const auto& tree : trees_) ++votes[static_cast<std::size_t>(tree.predict(x))];
  return static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin());
}

namespace {

int majority(const std::vector<int>& counts) {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double gini_mass(const std::vector<int>& counts, int total) {
  // total * gini = total - sum(c^2) / total
  if (total == 0) return 0.0;
  double sq = 0.0;
  for (int c : counts) sq += static_cast<double>(c) * c;
  return static_cast<double>(total) - sq / total;
}

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double impurity = INFINITY;
};

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& x, std::span<const int> y, int classes, int max_features, int min_leaf,
              Rng& rng)
      : x_(x), y_(y), classes_(classes), max_features_(max_features), min_leaf_(min_leaf),
        rng_(rng) {}

  DecisionTree build(std::vector<std::size_t> samples) {
    DecisionTree tree;
    struct Task {
      std::vector<std::size_t> samples;
      int node;
    };
    tree.nodes.emplace_back();
    std::vector<Task> stack;
    stack.push_back({std::move(samples), 0});
    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      std::vector<int> counts(static_cast<std::size_t>(classes_), 0);
      for (auto i : task.samples) ++counts[static_cast<std::size_t>(y_[i])];
      const int label = majority(counts);
      tree.nodes[static_cast<std::size_t>(task.node)].label = label;
      const auto n = static_cast<int>(task.samples.size());
      if (counts[static_cast<std::size_t>(label)] == n || n < 2 * min_leaf_) continue;

      const Split split = best_split(task.samples, counts);
      if (split.feature < 0) continue;
      std::vector<std::size_t> left, right;
      for (auto i : task.samples) {
        (x_(i, static_cast<std::size_t>(split.feature)) <= split.threshold ? left : right).push_back(i);
      }
      const int l = static_cast<int>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      auto& node = tree.nodes[static_cast<std::size_t>(task.node)];
      node.feature = split.feature;
      node.threshold = split.threshold;
      node.left = l;
      node.right = l + 1;
      stack.push_back({std::move(right), l + 1});
      stack.push_back({std::move(left), l});
    }
    return tree;
  }

 private:
  Split best_split(const std::vector<std::size_t>& samples, const std::vector<int>& counts) {
    std::vector<std::size_t> features(x_.cols());
    std::iota(features.begin(), features.end(), 0);
    rng_.shuffle(std::span<std::size_t>(features));
    const int n = static_cast<int>(samples.size());
    Split best;
    int scored = 0;
    std::vector<std::pair<double, int>> column(samples.size());
    std::vector<int> left(static_cast<std::size_t>(classes_));
    std::vector<int> right(static_cast<std::size_t>(classes_));
    for (auto f : features) {
      if (scored >= max_features_) break;
      for (std::size_t k = 0; k < samples.size(); ++k) {
        column[k] = {x_(samples[k], f), y_[samples[k]]};
      }
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;  // constant here
      ++scored;
      std::fill(left.begin(), left.end(), 0);
      right = counts;
      for (int k = 0; k + 1 < n; ++k) {
        const auto cls = static_cast<std::size_t>(column[static_cast<std::size_t>(k)].second);
        ++left[cls];
        --right[cls];
        const double lo = column[static_cast<std::size_t>(k)].first;
        const double hi = column[static_cast<std::size_t>(k) + 1].first;
        if (lo == hi) continue;
        const int nl = k + 1;
        if (nl < min_leaf_ || n - nl < min_leaf_) continue;
        const double impurity = gini_mass(left, nl) + gini_mass(right, n - nl);
        double threshold = lo + (hi - lo) / 2.0;
        if (!(threshold < hi)) threshold = lo;
        const auto feature = static_cast<int>(f);
        const double eps = 1e-12 * n;
        const bool better =
            impurity < best.impurity - eps ||
            (impurity <= best.impurity + eps &&
             (feature < best.feature || (feature == best.feature && threshold < best.threshold)));
        if (better) best = {feature, threshold, impurity};
      }
    }
    return best;
  }

  const Matrix& x_;
  std::span<const int> y_;
  int classes_;
  int max_features_;
  int min_leaf_;
  Rng& rng_;
};

}  // namespace

RandomForest train_random_forest(const Matrix& x, std::span<const int> y, int classes,
                                 const ForestOptions& opts) {
  if (opts.trees < 1) throw ArgumentError("random forest needs at least one tree");
  if (y.size() != x.rows()) throw ArgumentError("label count does not match sample count");
  if (x.rows() == 0) throw ArgumentError("random forest needs training samples");
  for (int v : y) {
    if (v < 0 || v >= classes) throw ArgumentError("class label out of range");
  }
  const int max_features =
      opts.max_features > 0
          ? opts.max_features
          : std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(x.cols())))));
  const std::size_t n = x.rows();
  std::vector<DecisionTree> trees;
  trees.reserve(static_cast<std::size_t>(opts.trees));
  for (int t = 0; t < opts.trees; ++t) {
    Rng rng = Rng::derive(opts.seed, static_cast<std::uint64_t>(t));
    std::vector<std::size_t> bootstrap(n);
    std::vector<bool> in_bag(n, false);
    for (auto& i : bootstrap) {
      i = static_cast<std::size_t>(rng.below(n));
      in_bag[i] = true;
    }
    std::sort(bootstrap.begin(), bootstrap.end());
    TreeBuilder builder(x, y, classes, max_features, std::max(1, opts.min_leaf), rng);
    auto tree = builder.build(std::move(bootstrap));
    tree.out_of_bag = static_cast<std::size_t>(std::count(in_bag.begin(), in_bag.end(), false));
    trees.push_back(std::move(tree));
  }
  return RandomForest(std::move(trees), classes);
}

}  // namespace dynfeat
