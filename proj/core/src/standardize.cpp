#include "dynfeat/standardize.hpp"

#include <cmath>

#include "dynfeat/errors.hpp"

namespace dynfeat {

Standardizer Standardizer::fit(const RowView& rows) {
  if (rows.size() == 0) throw ArgumentError("cannot fit a standardizer on zero rows");
  const std::size_t cols = rows.cols();
  std::vector<long double> sum(cols, 0.0L);
  const Matrix data = rows.gather();
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) sum[j] += data(i, j);
  }
  const auto count = static_cast<long double>(data.rows());
  std::vector<ColumnScaling> out(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const long double mean = sum[j] / count;
    long double ss = 0.0L;
    for (std::size_t i = 0; i < data.rows(); ++i) {
      const long double dev = data(i, j) - mean;
      ss += dev * dev;
    }
    const double stddev = static_cast<double>(std::sqrt(ss / count));
    const double scale = std::max(1.0, std::abs(static_cast<double>(mean)));
    if (stddev > 1e-12 * scale) {
      out[j] = {static_cast<double>(mean), stddev, true};
    } else {
      out[j] = {static_cast<double>(mean), 0.0, false};
    }
  }
  return Standardizer(std::move(out));
}

void Standardizer::transform(std::span<double> row) const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].scaled) row[j] = (row[j] - columns_[j].mean) / columns_[j].stddev;
  }
}

Matrix Standardizer::transform(Matrix m) const {
  for (std::size_t i = 0; i < m.rows(); ++i) transform(m.row(i));
  return m;
}

FeatureMatrix fit_standardizer(const FeatureMatrix& fm, std::span<const std::size_t> train_idx) {
  const Matrix m = fm.to_matrix();
  const auto scaler = Standardizer::fit(RowView(m, train_idx));
  FeatureMatrix out = fm;
  for (auto& row : out.rows) scaler.transform(row.values);
  out.standardization = scaler.columns();
  return out;
}

}  // namespace dynfeat
