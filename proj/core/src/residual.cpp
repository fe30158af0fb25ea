#include "qturan/residual.hpp"

#include <algorithm>

#include "qturan/errors.hpp"

namespace qturan {

bool Residual::passes(const Scalar& rel_tol) const {
  if (exact_zero) return true;
  if (max_rel.is_exact() && rel_tol.is_exact()) return max_rel <= rel_tol;
  return max_rel.to_float(std::max(max_rel.digits(), 20u)) <=
         rel_tol.to_float(std::max(max_rel.digits(), 20u));
}

Residual compare_values(const std::vector<Scalar>& lhs, const std::vector<Scalar>& rhs,
                        std::string identity) {
  if (lhs.size() != rhs.size() || lhs.empty()) {
    throw DimensionError("residual needs two equally long, nonempty value lists");
  }
  const Mode mode = lhs.front().mode();
  Residual out{std::move(identity), mode, lhs.front().like(0), lhs.front().like(0),
               lhs.size() - 1, mode.is_exact(), std::nullopt, {}};
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const Scalar l = lhs[i].in_mode(mode);
    const Scalar r = rhs[i].in_mode(mode);
    const Scalar diff = abs(l - r);
    if (!diff.is_zero()) out.exact_zero = false;
    if (diff > out.max_abs) out.max_abs = diff;
    const Scalar scale = max(abs(l), abs(r));
    if (scale.is_zero()) continue;
    const Scalar rel = diff / scale;
    if (rel > out.max_rel) {
      out.max_rel = rel;
      out.worst_index = i;
    }
  }
  if (!mode.is_exact()) out.exact_zero = false;
  return out;
}

Residual compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                        std::string identity) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  std::vector<Scalar> l(lhs.coeffs().begin(), lhs.coeffs().begin() + static_cast<long>(order) + 1);
  std::vector<Scalar> r(rhs.coeffs().begin(), rhs.coeffs().begin() + static_cast<long>(order) + 1);
  return compare_values(l, r, std::move(identity));
}

}  // namespace qturan
