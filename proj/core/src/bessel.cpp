#include "qturan/bessel.hpp"

#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"
#include "qturan/series.hpp"

namespace qturan {

namespace {

void require_float(const QBase& q, const char* what) {
  if (q.is_exact()) {
    throw ModeMismatchError(std::string(what) + " involves infinite products; use Float mode");
  }
}

// Series tolerance a little below the working precision.
Scalar series_tolerance(const QBase& q) { return default_tolerance(q.mode()) / q.one().like(100); }

// (y/2)^alpha with the conventions 0^0 = 1 and integer alpha allowed for y < 0.
Scalar half_power(const Scalar& y, const Scalar& alpha) {
  const Scalar half = y / y.like(2);
  if (const auto n = alpha.as_integer()) {
    if (half.is_zero()) {
      if (*n < 0) throw PoleError("(y/2)^alpha is infinite at y = 0 for alpha < 0");
      return *n == 0 ? y.like(1) : y.like(0);
    }
    return half.pow(*n);
  }
  if (half.is_zero()) {
    if (alpha.sign() < 0) throw PoleError("(y/2)^alpha is infinite at y = 0 for alpha < 0");
    return y.like(0);
  }
  if (half.sign() < 0) throw DomainError("(y/2)^alpha needs y > 0 for non-integer alpha");
  return real_pow(half, alpha);
}

Scalar jackson_prefactor(const Scalar& alpha, const Scalar& y, const QBase& q) {
  const Scalar top = alpha + alpha.like(1);
  return half_power(y, alpha) * qpochhammer_infinite(q.pow(top), q) /
         qpochhammer_infinite(q.q(), q);
}

}  // namespace

Scalar qbessel_j1(const Scalar& alpha_in, const Scalar& y_in, const QBase& q,
                  std::size_t max_order) {
  require_float(q, "qbessel_j1");
  const Scalar alpha = alpha_in.in_mode(q.mode());
  const Scalar y = y_in.in_mode(q.mode());
  if (abs(y) >= y.like(2)) throw DomainError("J1 needs |y| < 2, got y = " + y.to_string());
  const Scalar prefactor = jackson_prefactor(alpha, y, q);
  if (prefactor.is_zero()) return prefactor;
  const Scalar zero = q.one().like(0);
  const PhiSpec spec{ParamVector({zero, zero}), ParamVector({q.pow(alpha + alpha.like(1))}), q};
  const Scalar z = -(y * y) / y.like(4);
  return prefactor * tphis_evaluate(spec, z, series_tolerance(q), max_order).value;
}

Scalar qbessel_j2(const Scalar& alpha_in, const Scalar& y_in, const QBase& q,
                  std::size_t max_order) {
  require_float(q, "qbessel_j2");
  const Scalar alpha = alpha_in.in_mode(q.mode());
  const Scalar y = y_in.in_mode(q.mode());
  const Scalar prefactor = jackson_prefactor(alpha, y, q);
  if (prefactor.is_zero()) return prefactor;
  const Scalar bottom = q.pow(alpha + alpha.like(1));
  const PhiSpec spec{ParamVector(), ParamVector({bottom}), q};
  const Scalar z = -(y * y) * bottom / y.like(4);
  return prefactor * tphis_evaluate(spec, z, series_tolerance(q), max_order).value;
}

Scalar modified_qbessel_i1(const Scalar& nu_in, const Scalar& y_in, const QBase& q,
                           std::size_t max_order) {
  require_float(q, "modified_qbessel_i1");
  const Scalar nu = nu_in.in_mode(q.mode());
  const Scalar y = y_in.in_mode(q.mode());
  if (y.sign() <= 0 || y >= y.like(2)) {
    throw DomainError("I1 needs 0 < y < 2, got y = " + y.to_string());
  }
  const Scalar top = nu + nu.like(1);
  if (const auto n = top.as_integer(); n && *n <= 0) {
    throw PoleError("I1_nu has a pole at nu = " + nu.to_string());
  }
  if (top.sign() <= 0) throw DomainError("I1 needs nu > -1, got nu = " + nu.to_string());

  const Scalar half = y / y.like(2);
  const Scalar zero = q.one().like(0);
  const PhiSpec spec{ParamVector({zero, zero}), ParamVector({q.pow(top)}), q};
  const Scalar series = tphis_evaluate(spec, half * half, series_tolerance(q), max_order).value;
  const Scalar one_minus_q = q.one() - q.q();
  return half_power(y, nu) / (real_pow(one_minus_q, nu) * qgamma(top, q)) * series;
}

}  // namespace qturan
