#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dynfeat/matrix.hpp"

namespace dynfeat {

/// What a row read is used for during cross-validation.
enum class AccessPhase {
  standardizer_fit,
  model_selection,    // inner cross-validation over hyperparameters
  feature_selection,  // greedy attribute-group search
  final_training,
  prediction,
};
inline constexpr std::size_t kAccessPhaseCount = 5;

/// Per-row read counters for one outer fold, by phase.
class FoldAudit {
 public:
  FoldAudit() = default;
  explicit FoldAudit(std::size_t rows) {
    for (auto& c : counts_) c.assign(rows, 0);
  }

  void touch(AccessPhase phase, std::size_t row) { ++counts_[static_cast<std::size_t>(phase)][row]; }
  const std::vector<std::uint32_t>& counts(AccessPhase phase) const {
    return counts_[static_cast<std::size_t>(phase)];
  }

  int repeat = 0;
  int fold = 0;
  std::vector<std::size_t> test_rows;

 private:
  std::array<std::vector<std::uint32_t>, kAccessPhaseCount> counts_;
};

/// A subset of matrix rows. Every read goes through `row()` and is recorded
/// in the audit (when one is attached) under the view's phase.
class RowView {
 public:
  RowView(const Matrix& m, std::span<const std::size_t> rows, FoldAudit* audit = nullptr,
          AccessPhase phase = AccessPhase::final_training)
      : m_(&m), rows_(rows), audit_(audit), phase_(phase) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t cols() const { return m_->cols(); }
  std::size_t index(std::size_t k) const { return rows_[k]; }

  std::span<const double> row(std::size_t k) const {
    if (audit_) audit_->touch(phase_, rows_[k]);
    return m_->row(rows_[k]);
  }

  /// Dense copy of the viewed rows (each read once).
  Matrix gather() const {
    Matrix out(rows_.size(), m_->cols());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto r = row(k);
      std::copy(r.begin(), r.end(), out.row(k).begin());
    }
    return out;
  }

 private:
  const Matrix* m_;
  std::span<const std::size_t> rows_;
  FoldAudit* audit_;
  AccessPhase phase_;
};

}  // namespace dynfeat
