#include "qturan/series.hpp"

#include <algorithm>

#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"

namespace qturan {

namespace {

bool is_nonpositive_integer(const Scalar& z) {
  const auto n = z.as_integer();
  return n && *n <= 0;
}

std::size_t excess(const PhiSpec& spec) {
  const std::size_t t = spec.upper.size();
  const std::size_t s = spec.lower.size();
  if (t > s + 1) {
    throw DomainError("t-phi-s needs t <= s+1, got t=" + std::to_string(t) + ", s=" + std::to_string(s));
  }
  return 1 + s - t;
}

// R with |c_{n+1}/c_n| <= R for all n >= from, where c_n are the t-phi-s
// coefficients including scale^n. An upper parameter equal to q cancels the
// (q;q)_n factor exactly.
std::optional<Scalar> phi_ratio_bound(const PhiSpec& spec, std::size_t e, const Scalar& abs_scale,
                                      std::size_t from) {
  const Scalar one = spec.q.one();
  const Scalar q_from = spec.q.pow(static_cast<long>(from));
  Scalar r = abs_scale * q_from.pow(static_cast<long>(e));
  bool cancelled = false;
  for (const Scalar& raw : spec.upper) {
    const Scalar a = raw.in_mode(spec.q.mode());
    if (!cancelled && a == spec.q.q()) {
      cancelled = true;
      continue;
    }
    const Scalar aq = a * q_from;
    if (a.sign() >= 0 && aq <= one) continue;
    r *= one + abs(aq);
  }
  for (const Scalar& raw : spec.lower) {
    const Scalar b = raw.in_mode(spec.q.mode());
    if (b.sign() <= 0) continue;
    const Scalar bq = b * q_from;
    if (bq >= one) return std::nullopt;
    r /= one - bq;
  }
  if (!cancelled) r /= one - q_from * spec.q.q();
  return r;
}

// c_{n+1}/c_n for the t-phi-s coefficients (without the argument scale).
Scalar phi_step(const PhiSpec& spec, std::size_t e, const Scalar& q_n, std::size_t n) {
  const Scalar one = spec.q.one();
  Scalar num = one;
  for (const Scalar& a : spec.upper) num *= one - a.in_mode(spec.q.mode()) * q_n;
  Scalar den = one - q_n * spec.q.q();
  for (const Scalar& b : spec.lower) {
    const Scalar factor = one - b.in_mode(spec.q.mode()) * q_n;
    if (factor.is_zero()) {
      throw ParameterCollisionError("lower parameter " + b.to_string() + " equals q^-" +
                                    std::to_string(n) + "; (b;q)_n vanishes");
    }
    den *= factor;
  }
  Scalar step = num / den;
  if (e > 0) step *= (-q_n).pow(static_cast<long>(e));
  return step;
}

std::string describe_params(const ParamVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ",";
    out += v[i].to_string();
  }
  return out;
}

void require_positive_mu(const Scalar& mu, const char* family) {
  if (mu.sign() > 0) return;
  if (is_nonpositive_integer(mu)) {
    throw PoleError(std::string(family) + ": (q^mu;q)_n vanishes at mu = " + mu.to_string());
  }
  throw DomainError(std::string(family) + " needs mu > 0, got " + mu.to_string());
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, std::string family_label)
    : coeffs_(std::move(coeffs)), family_label_(std::move(family_label)) {
  if (coeffs_.empty()) throw DomainError("a truncated series needs at least c_0");
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  const std::size_t keep = std::min(order, this->order()) + 1;
  return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)),
                         family_label_);
}

Scalar series_eval(const TruncatedSeries& s, const Scalar& x) {
  if (s.radius() && abs(x.in_mode(s.mode())) >= *s.radius()) {
    throw DomainError("series '" + s.family_label() + "' is only valid for |x| < " +
                      s.radius()->to_string());
  }
  const Scalar xx = x.in_mode(s.mode());
  Scalar acc = s.coeffs().back();
  for (std::size_t n = s.order(); n-- > 0;) acc = acc * xx + s[n];
  return acc;
}

SeriesValue series_eval_bounded(const TruncatedSeries& s, const Scalar& x) {
  SeriesValue out{series_eval(s, x), std::nullopt, s.order() + 1};
  if (s.ratio_bound()) {
    const Scalar ax = abs(x.in_mode(s.mode()));
    const Scalar rx = *s.ratio_bound() * ax;
    if (rx < rx.like(1)) {
      const Scalar last = abs(s.coeffs().back()) * ax.pow(static_cast<long>(s.order()));
      out.tail_bound = last * rx / (rx.like(1) - rx);
    }
  }
  return out;
}

TruncatedSeries series_sum(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Scalar> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out.push_back(a[n] + b[n]);
  return TruncatedSeries(std::move(out), "(" + a.family_label() + ")+(" + b.family_label() + ")");
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Scalar> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out.push_back(a[n] - b[n]);
  return TruncatedSeries(std::move(out), "(" + a.family_label() + ")-(" + b.family_label() + ")");
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Scalar& factor) {
  std::vector<Scalar> out;
  out.reserve(a.order() + 1);
  for (const Scalar& c : a.coeffs()) out.push_back(c * factor);
  TruncatedSeries scaled(std::move(out), a.family_label());
  scaled.set_ratio_bound(a.ratio_bound());
  scaled.set_radius(a.radius());
  if (a.tail_note()) scaled.set_tail_note(*a.tail_note());
  return scaled;
}

TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Scalar> out;
  out.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Scalar acc = a[0] * b[m];
    for (std::size_t k = 1; k <= m; ++k) acc += a[k] * b[m - k];
    out.push_back(std::move(acc));
  }
  TruncatedSeries product(std::move(out), "(" + a.family_label() + ")*(" + b.family_label() + ")");
  if (a.radius() || b.radius()) {
    if (a.radius() && b.radius()) {
      product.set_radius(min(*a.radius(), *b.radius()));
    } else {
      product.set_radius(a.radius() ? a.radius() : b.radius());
    }
  }
  return product;
}

TruncatedSeries tphis_series(const PhiSpec& spec, std::size_t order,
                             const std::optional<Scalar>& argument_scale) {
  const std::size_t e = excess(spec);
  const Scalar one = spec.q.one();
  const Scalar scale = argument_scale ? argument_scale->in_mode(spec.q.mode()) : one;

  std::vector<Scalar> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(one);
  Scalar q_n = one;
  for (std::size_t n = 0; n < order; ++n) {
    coeffs.push_back(coeffs.back() * phi_step(spec, e, q_n, n) * scale);
    q_n *= spec.q.q();
  }

  TruncatedSeries series(std::move(coeffs), std::to_string(spec.upper.size()) + "phi" +
                                                std::to_string(spec.lower.size()) + "(" +
                                                describe_params(spec.upper) + ";" +
                                                describe_params(spec.lower) + ")");
  series.set_ratio_bound(phi_ratio_bound(spec, e, abs(scale), order));
  if (e == 0) {
    series.set_radius(one / abs(scale));
    series.set_tail_note("t = s+1: converges only for |x| < " + (one / abs(scale)).to_string());
  } else {
    series.set_tail_note("entire; coefficients decay like q^(" + std::to_string(e) + "*n(n-1)/2)");
  }
  return series;
}

SeriesValue tphis_evaluate(const PhiSpec& spec, const Scalar& z, const Scalar& rel_tol,
                           std::size_t max_order) {
  const std::size_t e = excess(spec);
  const Mode mode = spec.q.mode();
  const Scalar zz = z.in_mode(mode);
  const Scalar tol = rel_tol.in_mode(mode);
  const Scalar abs_z = abs(zz);
  const Scalar one = spec.q.one();
  if (e == 0 && abs_z >= one) {
    throw DomainError("t = s+1 series diverges at |z| = " + abs_z.to_string());
  }

  Scalar term = one;
  Scalar sum = one;
  Scalar q_n = one;
  for (std::size_t n = 0; n < max_order; ++n) {
    if (term.is_zero()) return {sum, one.like(0), n + 1};
    if (n % 4 == 0) {
      if (const auto bound = phi_ratio_bound(spec, e, abs_z, n); bound && *bound < one) {
        const Scalar tail = abs(term) * *bound / (one - *bound);
        const Scalar target = sum.is_zero() ? tol : tol * abs(sum);
        if (tail <= target) return {sum, tail, n + 1};
      }
    }
    term *= phi_step(spec, e, q_n, n) * zz;
    sum += term;
    q_n *= spec.q.q();
  }
  SeriesValue out{sum, std::nullopt, max_order + 1};
  if (const auto bound = phi_ratio_bound(spec, e, abs_z, max_order); bound && *bound < one) {
    out.tail_bound = abs(term) * *bound / (one - *bound);
  }
  return out;
}

PhiSpec heine_spec(const Scalar& mu, const QBase& q) {
  const Scalar zero = q.one().like(0);
  return PhiSpec{ParamVector({zero, zero}), ParamVector({q.pow(mu)}), q};
}

TruncatedSeries heine_f_series(const Scalar& mu, const QBase& q, std::size_t order) {
  require_positive_mu(mu, "heine_f_series");
  TruncatedSeries series = tphis_series(heine_spec(mu, q), order);
  series.set_family_label("f(mu=" + mu.to_string() + ")");
  return series;
}

TruncatedSeries heine_f_tilde_series(const Scalar& mu, const QBase& q, std::size_t order) {
  require_positive_mu(mu, "heine_f_tilde_series");
  TruncatedSeries series = tphis_series(heine_spec(mu, q), order);
  series.set_family_label("f~(mu=" + mu.to_string() + ")/[1/Gamma_q(mu)]");
  return series;
}

TruncatedSeries heine_f_tilde_absolute(const Scalar& mu, const QBase& q, std::size_t order) {
  require_positive_mu(mu, "heine_f_tilde_absolute");
  TruncatedSeries series =
      series_scale(tphis_series(heine_spec(mu, q), order), q.one() / qgamma(mu, q));
  series.set_family_label("f~(mu=" + mu.to_string() + ")");
  return series;
}

Scalar g_prefactor(const ParamVector& a, const ParamVector& b, const Scalar& mu, const QBase& q) {
  Scalar out = q.one();
  for (const Scalar& x : a) out *= qgamma(x + mu.in_mode(x.mode()), q);
  for (const Scalar& x : b) out /= qgamma(x + mu.in_mode(x.mode()), q);
  return out;
}

Scalar g_prefactor_ratio(const ParamVector& a, const ParamVector& b, const Scalar& mu,
                         const Scalar& reference, const QBase& q) {
  const Scalar diff = mu - reference;
  if (const auto k = diff.as_integer()) {
    const bool forward = *k >= 0;
    const Scalar& base = forward ? reference : mu;
    const auto steps = static_cast<std::size_t>(forward ? *k : -*k);
    Scalar ratio = q.one();
    for (const Scalar& x : a) ratio *= qgamma_ratio(x + base, steps, q);
    for (const Scalar& x : b) ratio /= qgamma_ratio(x + base, steps, q);
    return forward ? ratio : q.one() / ratio;
  }
  if (q.is_exact()) {
    throw OffGridError("Gamma_q prefactor ratio across the non-integral shift " + diff.to_string() +
                       " is transcendental");
  }
  return g_prefactor(a, b, mu, q) / g_prefactor(a, b, reference, q);
}

PhiSpec g_phi_spec(const ParamVector& a, const ParamVector& b, const Scalar& mu, const QBase& q) {
  std::vector<Scalar> upper;
  std::vector<Scalar> lower;
  for (const Scalar& x : a) upper.push_back(q.pow(x + mu));
  for (const Scalar& x : b) lower.push_back(q.pow(x + mu));
  return PhiSpec{ParamVector(std::move(upper)), ParamVector(std::move(lower)), q};
}

TruncatedSeries g_series(const ParamVector& a, const ParamVector& b, const Scalar& mu,
                         const QBase& q, std::size_t order,
                         const std::optional<Scalar>& reference_mu) {
  if (mu.sign() < 0) throw DomainError("g_series needs mu >= 0, got " + mu.to_string());
  for (const ParamVector* v : {&a, &b}) {
    for (const Scalar& x : *v) {
      if (x.sign() < 0) throw DomainError("g_series needs nonnegative parameters");
      if (is_nonpositive_integer(x + mu)) {
        throw PoleError("Gamma_q pole at parameter+mu = " + (x + mu).to_string());
      }
    }
  }
  const PhiSpec spec = g_phi_spec(a, b, mu, q);
  const std::size_t e = excess(spec);
  const Scalar scale = (q.q() - q.one()).pow(static_cast<long>(e));
  TruncatedSeries body = tphis_series(spec, order, scale);

  Scalar prefactor = q.one();
  std::string label = "g(mu=" + mu.to_string() + ")";
  if (reference_mu) {
    prefactor = g_prefactor_ratio(a, b, mu, reference_mu->in_mode(mu.mode()), q);
    label += "/P(" + reference_mu->to_string() + ")";
  } else if (!q.is_exact()) {
    prefactor = g_prefactor(a, b, mu, q);
  } else {
    label += "/P(" + mu.to_string() + ")";
  }
  TruncatedSeries series = series_scale(body, prefactor);
  series.set_family_label(label);
  return series;
}

TruncatedSeries kummer_1f1_unit_top(const Scalar& b, std::size_t order) {
  if (is_nonpositive_integer(b)) throw PoleError("1F1(1;b;x) has a pole at b = " + b.to_string());
  std::vector<Scalar> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(b.like(1));
  for (std::size_t n = 0; n < order; ++n) {
    coeffs.push_back(coeffs.back() / (b + b.like(static_cast<long>(n))));
  }
  TruncatedSeries series(std::move(coeffs), "1F1(1;" + b.to_string() + ")");
  const Scalar shifted = b + b.like(static_cast<long>(order));
  if (shifted > shifted.like(1)) series.set_ratio_bound(b.like(1) / shifted);
  series.set_tail_note("entire; coefficients 1/(b)_n");
  return series;
}

}  // namespace qturan
