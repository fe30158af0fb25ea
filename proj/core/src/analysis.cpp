#include "qturan/analysis.hpp"

#include <cmath>

#include "qturan/conditions.hpp"
#include "qturan/errors.hpp"

namespace qturan {

namespace {

Scalar as_float(const Scalar& x, unsigned digits) {
  return x.is_exact() ? x.to_float(digits) : x;
}

unsigned working_digits(const Scalar& x) { return x.is_exact() ? default_digits() : x.digits(); }

void require_uniform(const std::vector<Scalar>& grid) {
  const Scalar step = grid[1] - grid[0];
  if (step.sign() <= 0) throw DomainError("grid must be increasing");
  const Scalar tol = default_tolerance(step.mode()) * step.like(1000);
  for (std::size_t i = 2; i < grid.size(); ++i) {
    if (abs(grid[i] - grid[i - 1] - step) > tol * step) throw DomainError("grid must be uniform");
  }
}

}  // namespace

MonotonicityReport complete_monotonicity_check(const Evaluator& f, const std::vector<Scalar>& y_grid,
                                               std::size_t max_order) {
  if (y_grid.size() <= max_order + 1) {
    throw DomainError("insufficient grid: " + std::to_string(y_grid.size()) +
                      " points cannot carry differences of order " + std::to_string(max_order) +
                      " at more than one position");
  }
  require_uniform(y_grid);

  std::vector<Scalar> diff;
  diff.reserve(y_grid.size());
  for (const Scalar& y : y_grid) diff.push_back(f(y));
  Scalar magnitude = abs(diff.front());
  for (const Scalar& v : diff) magnitude = max(magnitude, abs(v));
  const Scalar eps = default_tolerance(diff.front().mode());

  MonotonicityReport out;
  out.passes = true;
  Scalar slack = eps * magnitude * magnitude.like(4);
  for (std::size_t n = 0; n <= max_order; ++n) {
    if (n > 0) {
      for (std::size_t i = 0; i + n < y_grid.size(); ++i) diff[i] = diff[i + 1] - diff[i];
      slack *= slack.like(2);
    }
    const std::size_t count = y_grid.size() - n;
    Scalar min_margin = n % 2 == 0 ? diff[0] : -diff[0];
    for (std::size_t i = 0; i < count; ++i) {
      const Scalar oriented = n % 2 == 0 ? diff[i] : -diff[i];
      if (oriented < min_margin) min_margin = oriented;
      if (oriented < -slack && out.passes) {
        out.passes = false;
        out.first_violation = std::make_pair(n, i);
      }
    }
    out.min_margin_by_order.push_back(min_margin);
  }
  return out;
}

ConvexityReport multiplicative_convexity_check(const Evaluator& f,
                                               const std::vector<std::pair<Scalar, Scalar>>& pairs) {
  ConvexityReport out;
  out.passes = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x1, x2] = pairs[i];
    if (x1.sign() <= 0 || x2.sign() <= 0) throw DomainError("multiplicative convexity needs x1, x2 > 0");
    const unsigned digits = working_digits(x1);
    const Scalar f1 = as_float(f(x1), digits);
    const Scalar f2 = as_float(f(x2), digits);
    if ((f1 * f2).sign() < 0) throw DomainError("f(x1) f(x2) < 0: the geometric mean is undefined");
    const Scalar mid = as_float(f(sqrt(as_float(x1, digits) * as_float(x2, digits))), digits);
    const Scalar margin = sqrt(f1 * f2) - mid;
    const Scalar slack = default_tolerance(margin.mode()) * max(abs(mid), margin.like(1)) * margin.like(10);
    if (margin < -slack && out.passes) {
      out.passes = false;
      out.first_violation = i;
    }
    out.margins.push_back(margin);
  }
  return out;
}

MeasureDensity measure_from_series(const TruncatedSeries& s, const std::optional<Scalar>& scale) {
  const Scalar factor = scale ? scale->in_mode(s.mode()) : s[0].like(1);
  MeasureDensity out{s[0] * factor, {}};
  out.coeffs.reserve(s.order());
  for (std::size_t m = 1; m <= s.order(); ++m) out.coeffs.push_back(s[m] * factor);
  return out;
}

Scalar tau_density(const MeasureDensity& tau, const Scalar& t) {
  if (tau.coeffs.empty()) return t.like(0);
  // sum_{m>=1} g_m t^(m-1)/(m-1)!, Horner in t with the factorials folded in.
  Scalar acc = tau.coeffs.back().in_mode(t.mode());
  for (std::size_t k = tau.coeffs.size() - 1; k-- > 0;) {
    acc = tau.coeffs[k].in_mode(t.mode()) + acc * t / t.like(static_cast<long>(k + 1));
  }
  return acc;
}

QuadResult tanh_sinh(const Evaluator& f, const Scalar& upper_limit, const Scalar& tolerance,
                     unsigned max_levels) {
  if (upper_limit.is_exact()) throw ModeMismatchError("quadrature runs in Float mode");
  if (upper_limit.sign() <= 0) throw DomainError("upper limit must be positive");
  const unsigned digits = upper_limit.digits();
  const Scalar one = upper_limit.like(1);
  const Scalar half_pi = Scalar(BigFloat::pi(bits_for_digits(digits)), digits) / one.like(2);
  const Scalar half_t = upper_limit / one.like(2);
  // Beyond u_max the weights fall below 10^(-digits-10).
  const double u_max = std::asinh(2.0 / M_PI * std::log(10.0) * (digits + 10));

  // Contribution of the abscissae +-u (u = 0 counted once).
  auto pair_sum = [&](const Scalar& u) {
    const Scalar s = half_pi * sinh(u);
    const Scalar cs = cosh(s);
    const Scalar w = half_t * half_pi * cosh(u) / (cs * cs);
    if (u.is_zero()) return w * f(half_t);
    const Scalar near = upper_limit / (exp(s + s) + one);  // T (1 - tanh s)/2
    return w * (f(near) + f(upper_limit - near));
  };

  Scalar h = one;
  Scalar sum = pair_sum(one.like(0));
  for (long k = 1; k <= static_cast<long>(u_max); ++k) sum += pair_sum(one.like(k));
  Scalar estimate = h * sum;
  QuadResult out{estimate, abs(estimate), upper_limit, 0, false};
  for (unsigned level = 1; level <= max_levels; ++level) {
    h /= one.like(2);
    // New abscissae are the odd multiples of h.
    const long count = static_cast<long>(std::ceil(u_max / h.to_double()));
    for (long k = 1; k <= count; k += 2) sum += pair_sum(h * one.like(k));
    const Scalar next = h * sum;
    out.error_estimate = abs(next - estimate);
    out.value = next;
    out.levels = level;
    estimate = next;
    if (level >= 3 && out.error_estimate <= tolerance) {
      out.converged = true;
      break;
    }
  }
  return out;
}

namespace {

// Smallest T = x*2^k with e^(-T/x) sum|g_m| T^(m-1)/(m-1)! * T below tol.
Scalar choose_upper_limit(const MeasureDensity& tau, const Scalar& x, const Scalar& tol) {
  MeasureDensity bound{tau.atom, {}};
  for (const Scalar& g : tau.coeffs) bound.coeffs.push_back(abs(g.in_mode(x.mode())));
  Scalar t = x * x.like(8);
  for (int k = 0; k < 40; ++k) {
    if (exp(-t / x) * tau_density(bound, t) * t < tol) return t;
    t *= t.like(2);
  }
  throw DomainError("could not choose a quadrature limit for x = " + x.to_string());
}

}  // namespace

Residual laplace_weight_oracle(std::size_t max_m, const Scalar& x_in, const QuadSpec& quad) {
  const Scalar x = as_float(x_in, working_digits(x_in));
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;
  for (std::size_t m = 1; m <= max_m; ++m) {
    MeasureDensity single{x.like(0), std::vector<Scalar>(m, x.like(0))};
    single.coeffs.back() = x.like(1);
    const Scalar limit = quad.upper_limit ? quad.upper_limit->in_mode(x.mode())
                                          : choose_upper_limit(single, x, quad.tolerance.in_mode(x.mode()));
    const QuadResult q = tanh_sinh(
        [&](const Scalar& t) { return exp(-t / x) * tau_density(single, t); }, limit,
        quad.tolerance.in_mode(x.mode()), quad.max_levels);
    lhs.push_back(q.value);
    rhs.push_back(x.pow(static_cast<long>(m)));
  }
  Residual r = compare_values(lhs, rhs, "laplace-weight");
  r.note = "int e^(-t/x) t^(m-1)/(m-1)! dt = x^m";
  return r;
}

Residual laplace_representation_check(const MeasureDensity& tau, const std::vector<Scalar>& x_grid,
                                      const QuadSpec& quad, const std::optional<Evaluator>& reference) {
  if (x_grid.empty()) throw DomainError("empty x grid");
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;
  std::string note;
  for (const Scalar& x_raw : x_grid) {
    const Scalar x = as_float(x_raw, working_digits(x_raw));
    if (x.sign() <= 0) throw DomainError("Laplace representation needs x > 0");
    const Scalar tol = quad.tolerance.in_mode(x.mode());
    const Scalar limit = quad.upper_limit ? quad.upper_limit->in_mode(x.mode())
                                          : choose_upper_limit(tau, x, tol);
    const QuadResult q = tanh_sinh(
        [&](const Scalar& t) { return exp(-t / x) * tau_density(tau, t); }, limit, tol,
        quad.max_levels);
    if (!q.converged) note += "quadrature not converged at x=" + x.to_string() + "; ";
    lhs.push_back(tau.atom.in_mode(x.mode()) + q.value);

    Scalar series = x.like(0);
    for (std::size_t m = tau.coeffs.size(); m-- > 0;) series = (series + tau.coeffs[m].in_mode(x.mode())) * x;
    series += tau.atom.in_mode(x.mode());
    if (!tau.coeffs.empty()) {
      const Scalar last = abs(tau.coeffs.back().in_mode(x.mode())) *
                          x.pow(static_cast<long>(tau.coeffs.size()));
      if (last > tol) note += "series truncation exceeds the quadrature tolerance at x=" + x.to_string() + "; ";
    }
    rhs.push_back(reference ? (*reference)(x) : series);
  }
  Residual r = compare_values(lhs, rhs, "laplace-representation");
  r.order_checked = tau.coeffs.size();
  r.note = note;
  return r;
}

int representation_sign(const TuranianSpec& spec) {
  if (spec.family.kind != Family::GNormalized) throw DomainError("the representation is stated for g");
  if (spec.family.a.size() != spec.family.b.size()) {
    throw DomainError("the Laplace representation needs t = s (an entire Turanian)");
  }
  const TheoremCase tc = theorem_case(spec.family.a, spec.family.b, spec.q);
  if (tc.case_b) return 1;
  if (tc.case_a) return -1;
  throw HypothesisError("no chain condition holds");
}

Evaluator turanian_evaluator(const TuranianSpec& spec) {
  const int sign = representation_sign(spec);
  return [spec, sign](const Scalar& x) {
    const QBase& q = spec.q;
    const Scalar mu = spec.mu.in_mode(q.mode());
    const Scalar a = spec.alpha.in_mode(q.mode());
    const Scalar b = spec.beta.in_mode(q.mode());
    const Scalar value =
        family_value(spec.family, mu + a, x, q) * family_value(spec.family, mu + b, x, q) -
        family_value(spec.family, mu, x, q) * family_value(spec.family, mu + a + b, x, q);
    return sign > 0 ? value : -value;
  };
}

MeasureDensity turanian_measure(const TuranianSpec& spec) {
  if (spec.q.is_exact()) throw ModeMismatchError("the absolute Turanian measure needs Float mode");
  const int sign = representation_sign(spec);
  const QBase& q = spec.q;
  const Scalar mu = spec.mu.in_mode(q.mode());
  const Scalar a = spec.alpha.in_mode(q.mode());
  const Scalar b = spec.beta.in_mode(q.mode());
  auto g = [&](const Scalar& nu) { return g_series(spec.family.a, spec.family.b, nu, q, spec.order); };
  const TruncatedSeries delta =
      series_sub(cauchy_product(g(mu + a), g(mu + b)), cauchy_product(g(mu), g(mu + a + b)));
  return measure_from_series(delta, q.one().like(sign));
}

}  // namespace qturan
