#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynfeat/classifier.hpp"
#include "dynfeat/matrix.hpp"

namespace dynfeat {

struct FeatureGroup {
  std::string name;
  std::vector<std::size_t> columns;
};

/// Groups columns by `column_group` name, in order of first appearance.
std::vector<FeatureGroup> group_columns(const std::vector<std::string>& column_groups);

/// Hyperparameter used while comparing groups: the middle of the C grid for
/// the SVM, the smallest forest for random forests.
double selection_hyperparameter(const ModelSpec& spec);

/// Greedy forward selection over whole attribute groups.
///
/// Starting from no groups, repeatedly adds the group whose union with the
/// current selection has the highest inner-CV accuracy (ties to the earlier
/// group) and stops once the best gain is not above `min_gain`. Returns the
/// chosen group indices in ascending order; a single group is returned as is.
std::vector<std::size_t> greedy_forward_selection(const Matrix& x, std::span<const int> y,
                                                  int classes,
                                                  const std::vector<FeatureGroup>& groups,
                                                  const ModelSpec& spec, int folds,
                                                  std::uint64_t seed, double min_gain = 0.001);

}  // namespace dynfeat
