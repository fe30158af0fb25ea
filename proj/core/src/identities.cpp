#include "qturan/identities.hpp"

#include "qturan/bessel.hpp"
#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"

namespace qturan {

namespace {

bool is_nonpositive_integer(const Scalar& z) {
  const auto n = z.as_integer();
  return n && *n <= 0;
}

void require_float(const QBase& q, const char* what) {
  if (q.is_exact()) throw ModeMismatchError(std::string(what) + " needs Float mode");
}

Scalar float_tolerance(const QBase& q) { return default_tolerance(q.mode()) / q.one().like(100); }

std::string describe(const char* name, const Scalar& nu, const Scalar& eta) {
  return std::string(name) + "(" + nu.to_string() + "," + eta.to_string() + ")";
}

// The parameters shared by both forms of the product formula.
struct ProductParams {
  Scalar q_nu;
  Scalar q_eta;
  Scalar a_squared;  // q^(nu+eta-1)
  Scalar b;          // q^((nu+eta)/2)
  std::optional<Scalar> a;  // q^((nu+eta-1)/2), only on the literal path
};

ProductParams product_params(const Scalar& nu, const Scalar& eta, const QBase& q) {
  const Scalar one = nu.like(1);
  const Scalar shift = nu + eta - one;
  if (const auto j = shift.as_integer(); j && *j < 0) {
    throw ParameterCollisionError("lower parameter q^(nu+eta-1) equals q^" + std::to_string(*j));
  }
  ProductParams out{q.pow(nu), q.pow(eta), q.pow(shift), q.pow((nu + eta) / nu.like(2)), std::nullopt};
  if (!shift.is_zero()) out.a = q.pow(shift / nu.like(2));
  return out;
}

// (A;q)_k(-A;q)_k/(A^2;q)_k; with A^2 = 1 the limit
// prod_{j=1}^{k-1} (1 - A^2 q^(2j))/(1 - A^2 q^j) is used.
Scalar paired_factor(const ProductParams& pp, const QBase& q, std::size_t k) {
  if (pp.a) {
    return qpochhammer_finite(*pp.a, q, k) * qpochhammer_finite(-*pp.a, q, k) /
           qpochhammer_finite(pp.a_squared, q, k);
  }
  Scalar out = q.one();
  for (std::size_t j = 1; j < k; ++j) {
    out *= (q.one() - pp.a_squared * q.pow(static_cast<long>(2 * j))) /
           (q.one() - pp.a_squared * q.pow(static_cast<long>(j)));
  }
  return out;
}

TruncatedSeries eq_series(const QBase& q, std::size_t order) {
  std::vector<Scalar> coeffs{q.one()};
  Scalar qk = q.one();
  for (std::size_t n = 1; n <= order; ++n) {
    qk *= q.q();
    coeffs.push_back(coeffs.back() / (q.one() - qk));
  }
  return TruncatedSeries(std::move(coeffs), "e_q");
}

TruncatedSeries zero_series(const Mode& mode, std::size_t order) {
  return TruncatedSeries(std::vector<Scalar>(order + 1, Scalar::of(0, mode)), "0");
}

// H(c; x) = 2phi1(q, 0; q^c; x).
TruncatedSeries h_series(const Scalar& c, const QBase& q, std::size_t order) {
  const PhiSpec spec{ParamVector({q.q(), q.one().like(0)}), ParamVector({q.pow(c)}), q};
  return tphis_series(spec, order);
}

Scalar h_value(const Scalar& c, const Scalar& x, const QBase& q) {
  const PhiSpec spec{ParamVector({q.q(), q.one().like(0)}), ParamVector({q.pow(c)}), q};
  return tphis_evaluate(spec, x, float_tolerance(q)).value;
}

// 1F1(1; b; x) summed until the terms fall below rel_tol of the sum.
Scalar kummer_value(const Scalar& b, const Scalar& x, const Scalar& rel_tol) {
  if (is_nonpositive_integer(b)) throw PoleError("1F1(1;b;x) has a pole at b = " + b.to_string());
  Scalar term = x.like(1);
  Scalar sum = term;
  for (long n = 0; n < 100000; ++n) {
    term *= x / (b + b.like(n));
    sum += term;
    const Scalar bn = b + b.like(n + 1);
    if (bn > abs(x) + abs(x) && abs(term) <= rel_tol * abs(sum)) return sum;
  }
  throw DivergenceError("1F1 summation did not settle");
}

long require_shift(const Scalar& alpha) {
  const auto k = alpha.as_integer();
  if (!k || *k < 0) throw HypothesisError("alpha must be a nonnegative integer, got " + alpha.to_string());
  return *k;
}

}  // namespace

TruncatedSeries rahman_product_lhs(const Scalar& nu, const Scalar& eta, const QBase& q,
                                   std::size_t order) {
  TruncatedSeries out = cauchy_product(heine_f_series(nu, q, order), heine_f_series(eta, q, order));
  out.set_family_label(describe("rahman-lhs", nu, eta));
  return out;
}

TruncatedSeries rahman_product_rhs(const Scalar& nu_in, const Scalar& eta_in, const QBase& q,
                                   std::size_t order) {
  const Scalar nu = nu_in.in_mode(q.mode());
  const Scalar eta = eta_in.in_mode(q.mode());
  const ProductParams pp = product_params(nu, eta, q);
  TruncatedSeries four_three = [&] {
    if (pp.a) {
      const PhiSpec spec{ParamVector({*pp.a, pp.b, -*pp.a, -pp.b}),
                         ParamVector({pp.q_nu, pp.q_eta, pp.a_squared}), q};
      return tphis_series(spec, order);
    }
    const Scalar one = q.one();
    std::vector<Scalar> coeffs{one};
    Scalar qk = one;
    for (std::size_t k = 0; k < order; ++k) {
      Scalar step = (one - pp.b * qk) * (one + pp.b * qk) /
                    ((one - pp.q_nu * qk) * (one - pp.q_eta * qk) * (one - qk * q.q()));
      if (k >= 1) step *= (one - pp.a_squared * qk * qk) / (one - pp.a_squared * qk);
      coeffs.push_back(coeffs.back() * step);
      qk *= q.q();
    }
    return TruncatedSeries(std::move(coeffs), "4phi3-reduced");
  }();
  TruncatedSeries out = cauchy_product(eq_series(q, order), four_three);
  out.set_family_label(describe("rahman-rhs", nu, eta));
  return out;
}

Residual verify_rahman_product(const Scalar& nu, const Scalar& eta, const QBase& q,
                               std::size_t order) {
  Residual r = compare_series(rahman_product_lhs(nu, eta, q, order),
                              rahman_product_rhs(nu, eta, q, order), "rahman-product");
  if (!product_params(nu.in_mode(q.mode()), eta.in_mode(q.mode()), q).a) {
    r.note = "q^(nu+eta-1) = 1: removable factor (A,-A;q)_k/(A^2;q)_k replaced by its limit";
  }
  return r;
}

Residual verify_finite_sum_identity(const Scalar& nu_in, const Scalar& eta_in, const QBase& q,
                                    std::size_t m) {
  const Scalar nu = nu_in.in_mode(q.mode());
  const Scalar eta = eta_in.in_mode(q.mode());
  const ProductParams pp = product_params(nu, eta, q);
  const Scalar one = q.one();
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;
  for (std::size_t n = 0; n <= m; ++n) {
    Scalar left = one.like(0);
    Scalar right = one.like(0);
    for (std::size_t k = 0; k <= n; ++k) {
      const Scalar qq_k = qpochhammer_finite(q.q(), q, k);
      const Scalar qq_rest = qpochhammer_finite(q.q(), q, n - k);
      left += one / (qpochhammer_finite(pp.q_nu, q, k) * qpochhammer_finite(pp.q_eta, q, n - k) *
                     qq_k * qq_rest);
      const Scalar top = paired_factor(pp, q, k) * qpochhammer_finite(pp.b, q, k) *
                         qpochhammer_finite(-pp.b, q, k);
      right += top / (qpochhammer_finite(pp.q_nu, q, k) * qpochhammer_finite(pp.q_eta, q, k) *
                      qq_k * qq_rest);
    }
    lhs.push_back(std::move(left));
    rhs.push_back(std::move(right));
  }
  Residual r = compare_values(lhs, rhs, "finite-sum");
  if (!pp.a) r.note = "q^(nu+eta-1) = 1: removable factor replaced by its limit";
  return r;
}

Residual verify_connection_formula(const Scalar& alpha, const Scalar& y_in, const QBase& q) {
  require_float(q, "connection formula");
  const Scalar y = y_in.in_mode(q.mode());
  const Scalar lhs = qbessel_j2(alpha, y, q);
  const Scalar rhs = qpochhammer_infinite(-(y * y) / y.like(4), q) * qbessel_j1(alpha, y, q);
  Residual r = compare_values({lhs}, {rhs}, "connection");
  r.note = "alpha=" + alpha.to_string() + ", y=" + y.to_string();
  return r;
}

SubstitutionProbe rahman_substitution_probe(const Scalar& alpha_in, const Scalar& beta_in,
                                            const Scalar& y_in, const QBase& q) {
  require_float(q, "substitution probe");
  const Scalar alpha = alpha_in.in_mode(q.mode());
  const Scalar beta = beta_in.in_mode(q.mode());
  const Scalar y = y_in.in_mode(q.mode());
  const Scalar one = q.one();
  const Scalar y4 = y.pow(4);
  if (y.sign() <= 0 || !(y4 < one.like(4)) || y == one) {
    throw DomainError("substitution probe needs 0 < y < 2^(1/2) and y != 1, got " + y.to_string());
  }
  const Scalar nu = alpha + one;
  const Scalar eta = beta + one;
  const Scalar y2 = y * y;

  // Rahman's form: J2_alpha J2_beta / (-y^2/4;q)_inf divided by its prefactor.
  const Scalar prefactor = real_pow(y / ((one + one) * (one - q.q())), alpha + beta) /
                           (qgamma(nu, q) * qgamma(eta, q));
  const Scalar rahman = qbessel_j2(alpha, y, q) * qbessel_j2(beta, y, q) /
                        qpochhammer_infinite(-y2 / one.like(4), q) / prefactor;

  // The product formula read as 4phi3(z) = (z;q)_inf 2phi1(nu;z) 2phi1(eta;z).
  auto product_side = [&](const Scalar& z) {
    const Scalar tol = float_tolerance(q);
    return qpochhammer_infinite(z, q) * tphis_evaluate(heine_spec(nu, q), z, tol).value *
           tphis_evaluate(heine_spec(eta, q), z, tol).value;
  };
  SubstitutionProbe out{compare_values({rahman}, {product_side(-y2 / one.like(4))}, "z=-y^2/4"),
                        compare_values({rahman}, {product_side(-(y2 * y2) / one.like(4))}, "z=-y^4/4"),
                        "undecided"};
  const Scalar tol = default_tolerance(q.mode()) * one.like(1000000);
  const bool square_ok = out.y_squared.max_rel <= tol;
  const bool fourth_ok = out.y_fourth.max_rel <= tol;
  if (square_ok && !fourth_ok) out.consistent_substitution = "-y^2/4";
  if (fourth_ok && !square_ok) out.consistent_substitution = "-y^4/4";
  return out;
}

TruncatedSeries linearization_lhs(const Scalar& mu_in, long alpha, const Scalar& beta_in,
                                  const QBase& q, std::size_t order) {
  const Scalar mu = mu_in.in_mode(q.mode());
  const Scalar beta = beta_in.in_mode(q.mode());
  const Scalar a = Scalar::of(alpha, q.mode());
  const auto k = static_cast<std::size_t>(alpha);
  TruncatedSeries out = series_sub(
      series_scale(cauchy_product(h_series(mu + a, q, order), h_series(mu + beta, q, order)),
                   qpochhammer_finite(q.pow(mu + beta), q, k)),
      series_scale(cauchy_product(h_series(mu, q, order), h_series(mu + a + beta, q, order)),
                   qpochhammer_finite(q.pow(mu), q, k)));
  out.set_family_label("linearization-lhs");
  return out;
}

TruncatedSeries linearization_rhs(const Scalar& mu_in, long alpha, const Scalar& beta_in,
                                  const QBase& q, std::size_t order, LinearizationPath path) {
  const Scalar mu = mu_in.in_mode(q.mode());
  const Scalar beta = beta_in.in_mode(q.mode());
  const Scalar one = q.one();
  if (path == LinearizationPath::UnitShift) {
    if (alpha != 1) throw DomainError("the unit-shift formula needs alpha = 1");
    TruncatedSeries out =
        series_sub(series_scale(h_series(mu + one, q, order), one - q.pow(mu + beta)),
                   series_scale(h_series(mu + beta + one, q, order), one - q.pow(mu)));
    out.set_family_label("linearization-rhs-unit");
    return out;
  }
  const Scalar top = mu + Scalar::of(alpha, q.mode()) + beta;
  TruncatedSeries out = zero_series(q.mode(), order);
  for (long j = 0; j < alpha; ++j) {
    const Scalar jj = Scalar::of(j, q.mode());
    const auto a1 = static_cast<std::size_t>(alpha - 1 - j);
    const auto a2 = static_cast<std::size_t>(1 + j);
    const auto a3 = static_cast<std::size_t>(alpha - j);
    const auto a4 = static_cast<std::size_t>(j);
    const Scalar w_up = qpochhammer_finite(q.pow(mu + one + jj), q, a1) *
                        qpochhammer_finite(q.pow(top - one - jj), q, a2);
    const Scalar w_down =
        qpochhammer_finite(q.pow(mu + jj), q, a3) * qpochhammer_finite(q.pow(top - jj), q, a4);
    out = series_sum(out, series_scale(h_series(mu + one + jj, q, order), w_up));
    out = series_sub(out, series_scale(h_series(top - jj, q, order), w_down));
  }
  out.set_family_label("linearization-rhs");
  return out;
}

Residual verify_linearization(const Scalar& mu, const Scalar& alpha, const Scalar& beta,
                              const QBase& q, std::size_t order, LinearizationPath path) {
  const long k = require_shift(alpha);
  return compare_series(linearization_lhs(mu, k, beta, q, order),
                        linearization_rhs(mu, k, beta, q, order, path),
                        path == LinearizationPath::General ? "linearization" : "linearization-unit");
}

TruncatedSeries kummer_linearization_lhs(const Scalar& mu, long alpha, const Scalar& beta,
                                         std::size_t order) {
  const Scalar a = mu.like(alpha);
  const auto k = static_cast<std::size_t>(alpha);
  TruncatedSeries out = series_sub(
      series_scale(cauchy_product(kummer_1f1_unit_top(mu + a, order),
                                  kummer_1f1_unit_top(mu + beta, order)),
                   pochhammer_classical(mu + beta, k)),
      series_scale(cauchy_product(kummer_1f1_unit_top(mu, order),
                                  kummer_1f1_unit_top(mu + a + beta, order)),
                   pochhammer_classical(mu, k)));
  out.set_family_label("kummer-lhs");
  return out;
}

TruncatedSeries kummer_linearization_rhs(const Scalar& mu, long alpha, const Scalar& beta,
                                         std::size_t order) {
  const Scalar one = mu.like(1);
  const Scalar top = mu + mu.like(alpha) + beta;
  TruncatedSeries out = zero_series(mu.mode(), order);
  for (long j = 0; j < alpha; ++j) {
    const Scalar jj = mu.like(j);
    const Scalar w_up = pochhammer_classical(mu + one + jj, static_cast<std::size_t>(alpha - 1 - j)) *
                        pochhammer_classical(top - one - jj, static_cast<std::size_t>(1 + j));
    const Scalar w_down = pochhammer_classical(mu + jj, static_cast<std::size_t>(alpha - j)) *
                          pochhammer_classical(top - jj, static_cast<std::size_t>(j));
    out = series_sum(out, series_scale(kummer_1f1_unit_top(mu + one + jj, order), w_up));
    out = series_sub(out, series_scale(kummer_1f1_unit_top(top - jj, order), w_down));
  }
  out.set_family_label("kummer-rhs");
  return out;
}

Residual verify_kummer_linearization(const Scalar& mu, const Scalar& alpha, const Scalar& beta_in,
                                     std::size_t order) {
  const long k = require_shift(alpha);
  const Scalar beta = beta_in.in_mode(mu.mode());
  return compare_series(kummer_linearization_lhs(mu, k, beta, order),
                        kummer_linearization_rhs(mu, k, beta, order), "kummer");
}

std::vector<Residual> q_to_1_limit_study(const Scalar& mu_in, const Scalar& alpha,
                                         const Scalar& beta_in, const Scalar& x_in,
                                         const std::vector<Scalar>& q_sequence, unsigned digits) {
  const long k = require_shift(alpha);
  const auto ku = static_cast<std::size_t>(k);
  const Mode mode = Mode::floating(digits);
  const Scalar mu = mu_in.in_mode(mode);
  const Scalar beta = beta_in.in_mode(mode);
  const Scalar x = x_in.in_mode(mode);
  const Scalar one = Scalar::of(1, mode);
  const Scalar a = Scalar::of(k, mode);
  const Scalar top = mu + a + beta;
  const Scalar tol = default_tolerance(mode) / one.like(100);

  // Classical sides at x.
  Scalar lhs_limit = pochhammer_classical(mu + beta, ku) * kummer_value(mu + a, x, tol) *
                         kummer_value(mu + beta, x, tol) -
                     pochhammer_classical(mu, ku) * kummer_value(mu, x, tol) *
                         kummer_value(top, x, tol);
  Scalar rhs_limit = one.like(0);
  for (long j = 0; j < k; ++j) {
    const Scalar jj = one.like(j);
    rhs_limit += pochhammer_classical(mu + one + jj, static_cast<std::size_t>(k - 1 - j)) *
                 pochhammer_classical(top - one - jj, static_cast<std::size_t>(1 + j)) *
                 kummer_value(mu + one + jj, x, tol);
    rhs_limit -= pochhammer_classical(mu + jj, static_cast<std::size_t>(k - j)) *
                 pochhammer_classical(top - jj, static_cast<std::size_t>(j)) *
                 kummer_value(top - jj, x, tol);
  }

  std::vector<Residual> out;
  Scalar previous_q = one.like(0);
  for (const Scalar& q_raw : q_sequence) {
    const Scalar qv = q_raw.in_mode(mode);
    if (!(qv > previous_q)) throw DomainError("q sequence must increase toward 1");
    previous_q = qv;
    const QBase q = QBase::from_q(qv);
    const Scalar gap = one - qv;
    const Scalar z = gap * x;
    const Scalar scale = gap.pow(k);

    const Scalar lhs = (qpochhammer_finite(q.pow(mu + beta), q, ku) * h_value(mu + a, z, q) *
                            h_value(mu + beta, z, q) -
                        qpochhammer_finite(q.pow(mu), q, ku) * h_value(mu, z, q) *
                            h_value(top, z, q)) /
                       scale;
    Scalar rhs = one.like(0);
    for (long j = 0; j < k; ++j) {
      const Scalar jj = one.like(j);
      rhs += qpochhammer_finite(q.pow(mu + one + jj), q, static_cast<std::size_t>(k - 1 - j)) *
             qpochhammer_finite(q.pow(top - one - jj), q, static_cast<std::size_t>(1 + j)) *
             h_value(mu + one + jj, z, q);
      rhs -= qpochhammer_finite(q.pow(mu + jj), q, static_cast<std::size_t>(k - j)) *
             qpochhammer_finite(q.pow(top - jj), q, static_cast<std::size_t>(j)) *
             h_value(top - jj, z, q);
    }
    rhs /= scale;

    Residual r = compare_values({lhs, rhs}, {lhs_limit, rhs_limit}, "q-limit(q=" + qv.to_string() + ")");
    r.order_checked = 0;
    const Scalar floor = real_pow(one.like(10), -one.like(static_cast<long>(digits)) / one.like(2));
    if (gap < floor) r.note = "1-q is below 10^(-digits/2); precision may be exhausted";
    out.push_back(std::move(r));
  }
  return out;
}

Residual verify_recqgamma(const Scalar& mu_in, const Scalar& beta_in, const QBase& q,
                          std::size_t m) {
  const Scalar mu = mu_in.in_mode(q.mode());
  const Scalar beta = beta_in.in_mode(q.mode());
  if (is_nonpositive_integer(mu) || is_nonpositive_integer(mu + beta)) {
    throw PoleError("Gamma_q pole at mu or mu+beta");
  }
  const Scalar one = q.one();
  const Scalar gap = one - q.q();
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;
  if (q.is_exact()) {
    // Everything multiplied by Gamma_q(mu)Gamma_q(mu+beta) and expressed
    // through Gamma_q(x+k)/Gamma_q(x) = (q^x;q)_k/(1-q)^k.
    const Scalar qm = q.pow(mu);
    const Scalar qmb = q.pow(mu + beta);
    for (std::size_t n = 0; n <= m; ++n) {
      const Scalar w = gap.pow(static_cast<long>(n + 1));
      Scalar left = one.like(0);
      for (std::size_t k = 0; k <= n; ++k) {
        left += w / (qpochhammer_finite(qm, q, k + 1) * qpochhammer_finite(qmb, q, n - k));
        left -= w / (qpochhammer_finite(qm, q, k) * qpochhammer_finite(qmb, q, n - k + 1));
      }
      const Scalar pm = qpochhammer_finite(qm, q, n + 1);
      const Scalar pmb = qpochhammer_finite(qmb, q, n + 1);
      lhs.push_back(std::move(left));
      rhs.push_back(w * (pmb - pm) / (pm * pmb));
    }
    Residual r = compare_values(lhs, rhs, "recqgamma");
    r.note = "normalized by Gamma_q(mu)Gamma_q(mu+beta)";
    return r;
  }
  for (std::size_t n = 0; n <= m; ++n) {
    const auto nn = static_cast<long>(n);
    Scalar left = one.like(0);
    for (long k = 0; k <= nn; ++k) {
      left += one / (qgamma(mu + one.like(k + 1), q) * qgamma(mu + beta + one.like(nn - k), q));
      left -= one / (qgamma(mu + one.like(k), q) * qgamma(mu + beta + one.like(nn - k + 1), q));
    }
    const Scalar numer = qpochhammer_finite(q.pow(mu + beta), q, n + 1) -
                         qpochhammer_finite(q.pow(mu), q, n + 1);
    lhs.push_back(std::move(left));
    rhs.push_back(numer / (qgamma(mu + one.like(nn + 1), q) *
                           qgamma(mu + beta + one.like(nn + 1), q) * gap.pow(nn + 1)));
  }
  return compare_values(lhs, rhs, "recqgamma");
}

Residual verify_gamma_ratio(const Scalar& x_in, std::size_t k, const QBase& q) {
  require_float(q, "gamma ratio check");
  const Scalar x = x_in.in_mode(q.mode());
  const Scalar direct = qgamma(x + x.like(static_cast<long>(k)), q) / qgamma(x, q);
  Residual r = compare_values({direct}, {qgamma_ratio(x, k, q)}, "gamma-ratio");
  r.order_checked = k;
  return r;
}

}  // namespace qturan
