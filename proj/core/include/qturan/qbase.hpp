#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qturan/scalar.hpp"

namespace qturan {

/// The base q in (0,1), held through its square root p so that q^(k/2) is
/// an integer power of p. In Exact mode q is rational and p lies in Q(sqrt d).
class QBase {
 public:
  static QBase from_q(const Scalar& q);
  static QBase from_p(const Scalar& p);

  const Scalar& p() const { return p_; }
  const Scalar& q() const { return q_; }
  Mode mode() const { return q_.mode(); }
  bool is_exact() const { return q_.is_exact(); }

  /// p^half_exponent = q^(half_exponent/2); exact in Exact mode.
  Scalar qpow(long half_exponent) const { return p_.pow(half_exponent); }
  /// q^n for an integer n.
  Scalar pow(long n) const { return q_.pow(n); }
  /// q^u. Exact mode requires a rational u whose root of q is rational or
  /// quadratic (e.g. quarter powers when p itself is rational); otherwise
  /// OffGridError.
  Scalar pow(const Scalar& exponent) const;

  Scalar one() const { return q_.like(1); }

 private:
  QBase(Scalar p, Scalar q) : p_(std::move(p)), q_(std::move(q)) {}

  Scalar p_;
  Scalar q_;
};

/// Parameter vector (the a or b of a basic hypergeometric series, or
/// derived vectors). With nonneg_required every entry must be >= 0.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<Scalar> entries, bool nonneg_required = false);

  const std::vector<Scalar>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  bool nonneg_required() const { return nonneg_required_; }

  /// (a_1 + mu, ..., a_t + mu).
  ParamVector shifted(const Scalar& mu) const;

  /// Comma separated list of scalars ("2,3" or "1/2,3/2").
  static ParamVector parse(const std::string& text, const Mode& mode, bool nonneg_required);

 private:
  std::vector<Scalar> entries_;
  bool nonneg_required_ = false;
};

}  // namespace qturan
