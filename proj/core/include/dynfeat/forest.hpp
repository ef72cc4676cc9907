#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynfeat/matrix.hpp"

namespace dynfeat {

struct ForestOptions {
  int trees = 100;
  std::uint64_t seed = 0;
  int max_features = 0;  // 0 means floor(sqrt(#features)), at least 1
  int min_leaf = 1;
};

/// CART classification tree with Gini splits on `x <= threshold`.
struct DecisionTree {
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int label = 0;
  };
  std::vector<Node> nodes;
  std::size_t out_of_bag = 0;  // training rows absent from this tree's bootstrap

  int predict(std::span<const double> x) const;
};

/// Bagged random-feature trees, majority vote with ties to the lower class id.
///
/// Within a node, features are visited in a random order until
/// `max_features` non-constant ones have been scored. The best split
/// minimizes weighted child Gini impurity; ties go to the lower feature index,
/// then the lower threshold. Trees grow until leaves are pure (no depth limit).
class RandomForest {
 public:
  RandomForest() = default;
  RandomForest(std::vector<DecisionTree> trees, int classes)
      : trees_(std::move(trees)), classes_(classes) {}

  int predict(std::span<const double> x) const;
  const std::vector<DecisionTree>& trees() const { return trees_; }
  int classes() const { return classes_; }

 private:
  std::vector<DecisionTree> trees_;
  int classes_ = 0;
};

/// Labels in 0..classes-1.
RandomForest train_random_forest(const Matrix& x, std::span<const int> y, int classes,
                                 const ForestOptions& opts);

}  // namespace dynfeat
