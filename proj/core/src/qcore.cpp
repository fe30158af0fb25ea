#include "qturan/qcore.hpp"

#include <algorithm>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

void require_float(const Scalar& value, const char* what) {
  if (value.is_exact()) {
    throw ModeMismatchError(std::string(what) + " is transcendental; use Float mode");
  }
}

bool is_nonpositive_integer(const Scalar& z) {
  const auto n = z.as_integer();
  return n && *n <= 0;
}

}  // namespace

Scalar qpochhammer_finite(const Scalar& a, const QBase& q, std::size_t n) {
  const Scalar x = a.in_mode(q.mode());
  Scalar out = q.one();
  Scalar term = x;
  for (std::size_t k = 0; k < n; ++k) {
    out *= q.one() - term;
    term *= q.q();
  }
  return out;
}

Scalar qpochhammer_infinite(const Scalar& a, const QBase& q) {
  return qpochhammer_infinite(a, q, default_tolerance(q.mode()));
}

Scalar qpochhammer_infinite(const Scalar& a, const QBase& q, const Scalar& rel_tol) {
  require_float(q.q(), "(a;q)_inf");
  const Mode mode = q.mode();
  const Scalar x = a.in_mode(mode);
  const Scalar tol = rel_tol.in_mode(mode);
  if (tol.sign() <= 0) throw DomainError("rel_tol must be positive");
  if (x.is_zero()) return q.one();

  const Scalar one = q.one();
  const Scalar half = Scalar::of(mpq_class(1, 2), mode);
  const Scalar quarter_tol = tol / one.like(4);
  const Scalar one_minus_q = one - q.q();
  const Scalar magnitude = abs(x);

  Scalar product = one;
  Scalar term = x;  // a q^k
  Scalar abs_term = magnitude;
  for (std::size_t k = 0;; ++k) {
    if (abs_term <= half) {
      const Scalar bound = abs_term / (one_minus_q * (one - abs_term));
      if (bound <= quarter_tol) break;
    }
    const Scalar factor = one - term;
    if (factor.is_zero()) return one.like(0);
    product *= factor;
    term *= q.q();
    abs_term *= q.q();
    if (k > 100000000) throw DivergenceError("(a;q)_inf did not converge");
  }
  return product;
}

Scalar qgamma(const Scalar& z, const QBase& q) { return qgamma(z, q, default_tolerance(q.mode())); }

Scalar qgamma(const Scalar& z, const QBase& q, const Scalar& rel_tol) {
  require_float(q.q(), "Gamma_q");
  if (is_nonpositive_integer(z)) throw PoleError("Gamma_q has a pole at z = " + z.to_string());
  const Scalar zz = z.in_mode(q.mode());
  const Scalar tol = rel_tol.in_mode(q.mode()) / q.one().like(4);
  const Scalar one = q.one();
  const Scalar prefactor = real_pow(one - q.q(), one - zz);
  return prefactor * qpochhammer_infinite(q.q(), q, tol) / qpochhammer_infinite(q.pow(zz), q, tol);
}

Scalar qgamma_ratio(const Scalar& x, std::size_t k, const QBase& q) {
  if (is_nonpositive_integer(x)) throw PoleError("Gamma_q has a pole at x = " + x.to_string());
  const Scalar xx = x.in_mode(q.mode());
  const Scalar one_minus_q = q.one() - q.q();
  return qpochhammer_finite(q.pow(xx), q, k) / one_minus_q.pow(static_cast<long>(k));
}

Scalar q_exponential(const Scalar& z, const QBase& q, std::size_t order) {
  const Scalar zz = z.in_mode(q.mode());
  if (abs(zz) >= q.one()) throw DivergenceError("e_q(z) needs |z| < 1, got " + z.to_string());
  Scalar sum = q.one();
  Scalar term = q.one();
  Scalar q_power = q.q();
  for (std::size_t k = 1; k <= order; ++k) {
    term *= zz / (q.one() - q_power);
    sum += term;
    q_power *= q.q();
  }
  return sum;
}

std::vector<Scalar> elementary_symmetric(std::span<const Scalar> c) {
  if (c.empty()) return {Scalar::exact(1)};
  std::vector<Scalar> e(c.size() + 1, c.front().like(0));
  e[0] = c.front().like(1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += c[j] * e[k - 1];
  }
  return e;
}

std::vector<Scalar> elementary_symmetric(const ParamVector& c) {
  return elementary_symmetric(std::span<const Scalar>(c.entries()));
}

bool weak_supermajorizes(const ParamVector& d, const ParamVector& c) {
  if (d.size() != c.size()) {
    throw DimensionError("weak majorization needs equal sizes, got " + std::to_string(d.size()) +
                         " and " + std::to_string(c.size()));
  }
  for (const Scalar& v : d) {
    if (v.sign() <= 0) throw DomainError("weak majorization needs positive entries");
  }
  for (const Scalar& v : c) {
    if (v.sign() <= 0) throw DomainError("weak majorization needs positive entries");
  }
  std::vector<Scalar> ds = d.entries();
  std::vector<Scalar> cs = c.entries();
  std::sort(ds.begin(), ds.end());
  std::sort(cs.begin(), cs.end());
  if (ds.empty()) return true;
  Scalar sum_d = ds.front().like(0);
  Scalar sum_c = cs.front().like(0);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    sum_d += ds[k];
    sum_c += cs[k];
    if (sum_c > sum_d) return false;
  }
  return true;
}

Scalar pochhammer_classical(const Scalar& mu, std::size_t n) {
  Scalar out = mu.like(1);
  for (std::size_t k = 0; k < n; ++k) out *= mu + mu.like(static_cast<long>(k));
  return out;
}

}  // namespace qturan
