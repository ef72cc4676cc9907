#include "dynfeat/selection.hpp"

#include <algorithm>

#include "dynfeat/cross_validation.hpp"
#include "dynfeat/errors.hpp"

namespace dynfeat {

std::vector<FeatureGroup> group_columns(const std::vector<std::string>& column_groups) {
  std::vector<FeatureGroup> groups;
  for (std::size_t c = 0; c < column_groups.size(); ++c) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const FeatureGroup& g) { return g.name == column_groups[c]; });
    if (it == groups.end()) {
      groups.push_back({column_groups[c], {}});
      it = groups.end() - 1;
    }
    it->columns.push_back(c);
  }
  return groups;
}

double selection_hyperparameter(const ModelSpec& spec) {
  const auto grid = spec.grid();
  if (spec.kind == ModelKind::random_forest) return *std::min_element(grid.begin(), grid.end());
  return grid[grid.size() / 2];
}

std::vector<std::size_t> greedy_forward_selection(const Matrix& x, std::span<const int> y,
                                                  int classes,
                                                  const std::vector<FeatureGroup>& groups,
                                                  const ModelSpec& spec, int folds,
                                                  std::uint64_t seed, double min_gain) {
  if (groups.empty()) throw ArgumentError("no feature groups to select from");
  if (groups.size() == 1) return {0};
  const double hyper = selection_hyperparameter(spec);
  std::vector<std::size_t> chosen;
  std::vector<bool> used(groups.size(), false);
  double current = 0.0;
  for (;;) {
    double best = -1.0;
    std::size_t best_group = groups.size();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (used[g]) continue;
      std::vector<std::size_t> columns;
      for (auto c : chosen) columns.insert(columns.end(), groups[c].columns.begin(), groups[c].columns.end());
      columns.insert(columns.end(), groups[g].columns.begin(), groups[g].columns.end());
      std::sort(columns.begin(), columns.end());
      const double acc = inner_cv_accuracy(x.select_columns(columns), y, classes, spec, hyper,
                                           folds, seed);
      if (acc > best) {
        best = acc;
        best_group = g;
      }
    }
    if (best_group == groups.size()) break;
    if (!chosen.empty() && best - current <= min_gain) break;
    chosen.push_back(best_group);
    used[best_group] = true;
    current = best;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace dynfeat
