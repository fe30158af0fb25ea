#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qturan/scalar.hpp"
#include "qturan/series.hpp"

namespace qturan {

/// Outcome of comparing two sides of an identity.
struct Residual {
  std::string identity;
  Mode mode;
  Scalar max_abs;
  /// max |l - r| / max(|l|, |r|); positions where both sides vanish count as 0.
  Scalar max_rel;
  std::size_t order_checked = 0;
  /// Exact mode only: every compared position agreed exactly.
  bool exact_zero = false;
  /// Index (coefficient or sample) with the largest relative deviation.
  std::optional<std::size_t> worst_index;
  std::string note;

  /// exact_zero, or max_rel <= rel_tol.
  bool passes(const Scalar& rel_tol) const;
};

/// Coefficientwise comparison up to the smaller order.
Residual compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                        std::string identity);
/// Positionwise comparison of two equally long lists.
Residual compare_values(const std::vector<Scalar>& lhs, const std::vector<Scalar>& rhs,
                        std::string identity);

}  // namespace qturan
