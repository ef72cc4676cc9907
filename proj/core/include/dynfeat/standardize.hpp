#pragma once

#include <span>
#include <vector>

#include "dynfeat/data_view.hpp"
#include "dynfeat/features.hpp"
#include "dynfeat/matrix.hpp"

namespace dynfeat {

/// Per-column z-scoring with population (divisor n) standard deviation.
/// Columns whose training spread is zero pass through untouched.
class Standardizer {
 public:
  Standardizer() = default;
  explicit Standardizer(std::vector<ColumnScaling> columns) : columns_(std::move(columns)) {}

  /// Statistics from the viewed rows only. Throws ArgumentError on an empty view.
  static Standardizer fit(const RowView& rows);

  const std::vector<ColumnScaling>& columns() const { return columns_; }
  void transform(std::span<double> row) const;
  Matrix transform(Matrix m) const;

 private:
  std::vector<ColumnScaling> columns_;
};

/// Fit on `train_idx`, transform every row, and record the scaling in the result.
FeatureMatrix fit_standardizer(const FeatureMatrix& fm, std::span<const std::size_t> train_idx);

}  // namespace dynfeat
