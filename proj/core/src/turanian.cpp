#include "qturan/turanian.hpp"

#include <algorithm>

#include "qturan/conditions.hpp"
#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"

namespace qturan {

namespace {

constexpr std::size_t kDefaultEnclosureFactors = 64;
constexpr std::size_t kMaxEnclosureFactors = 4096;

// Closed interval with outward-rounded MPFR endpoints.
struct Interval {
  BigFloat lo;
  BigFloat hi;
};

BigFloat rounded(const mpq_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  BigFloat out(bits);
  mpfr_set_q(out.get(), v.get_mpq_t(), rnd);
  return out;
}

// Encloses a + b sqrt(d).
Interval enclose(const QuadraticNumber& x, mpfr_prec_t bits) {
  Interval out{rounded(x.rational_part(), bits, MPFR_RNDD), rounded(x.rational_part(), bits, MPFR_RNDU)};
  const mpq_class& b = x.irrational_part();
  if (sgn(b) == 0) return out;
  BigFloat root_lo(bits);
  BigFloat root_hi(bits);
  mpfr_set_z(root_lo.get(), x.radicand().get_mpz_t(), MPFR_RNDD);
  mpfr_sqrt(root_lo.get(), root_lo.get(), MPFR_RNDD);
  mpfr_set_z(root_hi.get(), x.radicand().get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(root_hi.get(), root_hi.get(), MPFR_RNDU);
  BigFloat part_lo(bits);
  BigFloat part_hi(bits);
  if (sgn(b) > 0) {
    mpfr_mul_q(part_lo.get(), root_lo.get(), b.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(part_hi.get(), root_hi.get(), b.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(part_lo.get(), root_hi.get(), b.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(part_hi.get(), root_lo.get(), b.get_mpq_t(), MPFR_RNDU);
  }
  mpfr_add(out.lo.get(), out.lo.get(), part_lo.get(), MPFR_RNDD);
  mpfr_add(out.hi.get(), out.hi.get(), part_hi.get(), MPFR_RNDU);
  return out;
}

Interval multiply(const Interval& x, const Interval& y) {
  const mpfr_prec_t bits = std::max(x.lo.precision(), y.lo.precision());
  Interval out{BigFloat(bits), BigFloat(bits)};
  bool first = true;
  for (const BigFloat* u : {&x.lo, &x.hi}) {
    for (const BigFloat* v : {&y.lo, &y.hi}) {
      BigFloat down(bits);
      BigFloat up(bits);
      mpfr_mul(down.get(), u->get(), v->get(), MPFR_RNDD);
      mpfr_mul(up.get(), u->get(), v->get(), MPFR_RNDU);
      if (first || down < out.lo) out.lo = down;
      if (first || up > out.hi) out.hi = up;
      first = false;
    }
  }
  return out;
}

Interval subtract(const Interval& x, const Interval& y) {
  const mpfr_prec_t bits = std::max(x.lo.precision(), y.lo.precision());
  Interval out{BigFloat(bits), BigFloat(bits)};
  mpfr_sub(out.lo.get(), x.lo.get(), y.hi.get(), MPFR_RNDD);
  mpfr_sub(out.hi.get(), x.hi.get(), y.lo.get(), MPFR_RNDU);
  return out;
}

unsigned digits_for_bits(mpfr_prec_t bits) {
  return static_cast<unsigned>(static_cast<double>(bits) / 3.321928094887362);
}

// Gamma_q(mu+alpha)Gamma_q(mu+beta)/(Gamma_q(mu)Gamma_q(mu+alpha+beta))
//   = prod_{j>=0} r_j,
// r_j = (1-u_j)(1-u_j q^(alpha+beta)) / ((1-u_j q^alpha)(1-u_j q^beta)),
// u_j = q^(mu+j). Every r_j lies in (0,1) and
//   1 - r_j = u_j (1-q^alpha)(1-q^beta) / ((1-u_j q^alpha)(1-u_j q^beta))
//          <= u_j/(1-u_j)^2,
// so the tail product from j = N on is at least 1 - u_N/((1-q)(1-u_N)^2).
Interval gamma_weight_enclosure(const Scalar& mu, const Scalar& alpha, const Scalar& beta,
                                const QBase& q, std::size_t factors) {
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(192 + 2 * factors);
  const Scalar one = q.one();
  const Scalar qa = q.pow(alpha);
  const Scalar qb = q.pow(beta);
  const Scalar qab = qa * qb;
  Scalar u = q.pow(mu);
  Interval product{BigFloat(1L, bits), BigFloat(1L, bits)};
  for (std::size_t j = 0; j < factors; ++j) {
    const Scalar r = (one - u) * (one - u * qab) / ((one - u * qa) * (one - u * qb));
    product = multiply(product, enclose(r.exact_value(), bits));
    u *= q.q();
  }
  const Scalar tail = u / ((one - q.q()) * (one - u) * (one - u));
  const Interval tail_iv = enclose(tail.exact_value(), bits);
  BigFloat keep(bits);
  mpfr_ui_sub(keep.get(), 1, tail_iv.hi.get(), MPFR_RNDD);
  if (keep.sign() < 0) keep = BigFloat(0L, bits);
  BigFloat lower(bits);
  mpfr_mul(lower.get(), product.lo.get(), keep.get(), MPFR_RNDD);
  return Interval{lower, product.hi};
}

void require_hypotheses(const TuranianSpec& spec, const Scalar& mu, const Scalar& alpha,
                        const Scalar& beta) {
  if (alpha.sign() < 0 || beta.sign() < 0) {
    throw HypothesisError("shifts alpha, beta must be nonnegative");
  }
  if (spec.family.kind == Family::GNormalized) {
    if (mu.sign() < 0) throw HypothesisError("g family needs mu >= 0");
  } else if (mu.sign() <= 0) {
    throw HypothesisError(to_string(spec.family.kind) + " needs mu > 0");
  }
}

TruncatedSeries family_series(const TuranianSpec& spec, const Scalar& nu) {
  if (spec.family.kind == Family::GNormalized) {
    return g_series(spec.family.a, spec.family.b, nu, spec.q, spec.order, nu);
  }
  return heine_f_series(nu, spec.q, spec.order);
}

struct CoefficientRange {
  Scalar lo;
  Scalar hi;
};

// Exact ranges are degenerate intervals. Float ranges are widened by ten times
// the propagated rounding bound, so a strict sign is only reported when the
// coefficient exceeds that.
std::vector<CoefficientRange> coefficient_ranges(const TuranianExpansion& ex, std::size_t order,
                                                 const Mode& mode) {
  std::vector<CoefficientRange> out;
  out.reserve(order + 1);
  if (ex.second_weight) {
    const Scalar eps = default_tolerance(mode);
    for (std::size_t m = 0; m <= order; ++m) {
      const Scalar a = ex.first_weight * ex.first[m];
      const Scalar b = *ex.second_weight * ex.second[m];
      const Scalar value = a - b;
      if (mode.is_exact()) {
        out.push_back({value, value});
      } else {
        const Scalar err = value.like(10) * (abs(a) + abs(b)) * eps *
                           value.like(static_cast<long>(m + 10));
        out.push_back({value - err, value + err});
      }
    }
    return out;
  }
  const auto& [w_lo, w_hi] = *ex.second_weight_bounds;
  const mpfr_prec_t bits = w_lo.float_value().precision();
  const unsigned digits = digits_for_bits(bits);
  const Interval weight{w_lo.float_value(), w_hi.float_value()};
  for (std::size_t m = 0; m <= order; ++m) {
    const Interval a = enclose((ex.first_weight * ex.first[m]).exact_value(), bits);
    const Interval b = multiply(weight, enclose(ex.second[m].exact_value(), bits));
    const Interval c = subtract(a, b);
    out.push_back({Scalar(c.lo, digits), Scalar(c.hi, digits)});
  }
  return out;
}

int predicted_direction(Verdict v) {
  switch (v) {
    case Verdict::AllStrictlyPos:
    case Verdict::AllNonNeg: return 1;
    case Verdict::AllStrictlyNeg:
    case Verdict::AllNonPos: return -1;
    default: return 0;
  }
}

// 1: certified positive, -1: certified negative, 0: exactly zero, 2: unknown.
int range_sign(const CoefficientRange& r) {
  if (r.lo.sign() > 0) return 1;
  if (r.hi.sign() < 0) return -1;
  if (r.lo.is_zero() && r.hi.is_zero()) return 0;
  return 2;
}

bool violates(int sign, Verdict predicted) {
  switch (predicted) {
    case Verdict::AllStrictlyPos: return sign == 0 || sign == -1;
    case Verdict::AllStrictlyNeg: return sign == 0 || sign == 1;
    case Verdict::AllNonNeg: return sign == -1;
    case Verdict::AllNonPos: return sign == 1;
    case Verdict::Zero: return sign == 1 || sign == -1;
    default: return false;
  }
}

void classify(const std::vector<CoefficientRange>& ranges, SignReport& report) {
  bool pos = false;
  bool neg = false;
  bool zero = false;
  bool unknown = false;
  const int dir = predicted_direction(report.predicted);
  std::optional<Scalar> margin;
  for (std::size_t m = report.first_index; m < ranges.size(); ++m) {
    const int s = range_sign(ranges[m]);
    pos |= s == 1;
    neg |= s == -1;
    zero |= s == 0;
    unknown |= s == 2;
    if (!report.first_violation && violates(s, report.predicted)) report.first_violation = m;
    Scalar oriented = dir >= 0 ? ranges[m].lo : -ranges[m].hi;
    if (dir == 0) oriented = max(abs(ranges[m].lo), abs(ranges[m].hi));
    if (!margin || oriented < *margin) margin = oriented;
  }
  if (margin) report.min_margin = *margin;
  if (pos && neg) {
    report.verdict = Verdict::Mixed;
  } else if (unknown) {
    report.verdict = Verdict::Inconclusive;
  } else if (pos) {
    report.verdict = zero ? Verdict::AllNonNeg : Verdict::AllStrictlyPos;
  } else if (neg) {
    report.verdict = zero ? Verdict::AllNonPos : Verdict::AllStrictlyNeg;
  } else {
    report.verdict = Verdict::Zero;
  }
  report.matches_prediction = verdict_satisfies(report.verdict, report.predicted);
}

bool any_unknown(const std::vector<CoefficientRange>& ranges, std::size_t from) {
  for (std::size_t m = from; m < ranges.size(); ++m) {
    if (range_sign(ranges[m]) == 2) return true;
  }
  return false;
}

bool degenerate(const TuranianSpec& spec) { return spec.alpha.is_zero() || spec.beta.is_zero(); }

SignReport certify(const TuranianSpec& spec, Verdict predicted, std::size_t first_index) {
  SignReport report;
  report.predicted = degenerate(spec) ? Verdict::Zero : predicted;
  report.first_index = first_index;
  report.order_checked = spec.order;

  std::size_t factors = kDefaultEnclosureFactors;
  TuranianExpansion ex = turanian_expansion(spec, factors);
  std::vector<CoefficientRange> ranges = coefficient_ranges(ex, spec.order, spec.q.mode());
  while (!ex.second_weight && any_unknown(ranges, first_index) && factors < kMaxEnclosureFactors) {
    factors *= 2;
    ex = turanian_expansion(spec, factors);
    ranges = coefficient_ranges(ex, spec.order, spec.q.mode());
  }
  if (!ex.second_weight) {
    report.enclosure_factors = ex.enclosure_factors;
    report.note = "second weight enclosed by a " + std::to_string(ex.enclosure_factors) +
                  "-factor product; margins are certified lower bounds";
  }
  report.leading_zero = range_sign(ranges.front()) == 0;
  report.min_margin = ranges.front().lo.like(0);
  classify(ranges, report);
  return report;
}

Scalar evaluate_phi(const PhiSpec& spec, const Scalar& z) {
  const Scalar tol = default_tolerance(spec.q.mode()) / spec.q.one().like(100);
  const SeriesValue v = tphis_evaluate(spec, z, tol);
  if (!v.tail_bound) throw DivergenceError("series tail could not be bounded at z = " + z.to_string());
  return v.value;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::HeineF: return "heine-f";
    case Family::HeineFTilde: return "heine-f-tilde";
    case Family::GNormalized: return "g";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::AllStrictlyPos: return "AllStrictlyPos";
    case Verdict::AllStrictlyNeg: return "AllStrictlyNeg";
    case Verdict::AllNonNeg: return "AllNonNeg";
    case Verdict::AllNonPos: return "AllNonPos";
    case Verdict::Zero: return "Zero";
    case Verdict::Mixed: return "Mixed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(TuranDirection d) { return d == TuranDirection::Direct ? "direct" : "inverse"; }

bool verdict_satisfies(Verdict observed, Verdict predicted) {
  switch (predicted) {
    case Verdict::AllNonNeg:
      return observed == Verdict::AllNonNeg || observed == Verdict::AllStrictlyPos ||
             observed == Verdict::Zero;
    case Verdict::AllNonPos:
      return observed == Verdict::AllNonPos || observed == Verdict::AllStrictlyNeg ||
             observed == Verdict::Zero;
    default: return observed == predicted;
  }
}

TuranianExpansion turanian_expansion(const TuranianSpec& spec, std::size_t enclosure_factors) {
  const Mode mode = spec.q.mode();
  const Scalar mu = spec.mu.in_mode(mode);
  Scalar alpha = spec.alpha.in_mode(mode);
  Scalar beta = spec.beta.in_mode(mode);
  require_hypotheses(spec, mu, alpha, beta);
  const Scalar one = spec.q.one();

  if (spec.family.kind == Family::GNormalized && !alpha.as_integer() && beta.as_integer()) {
    std::swap(alpha, beta);  // Delta is symmetric in the shifts
  }

  TuranianExpansion ex{cauchy_product(family_series(spec, mu + alpha), family_series(spec, mu + beta)),
                       cauchy_product(family_series(spec, mu), family_series(spec, mu + alpha + beta)),
                       one, one, std::nullopt, 0, {}};

  switch (spec.family.kind) {
    case Family::HeineF:
      ex.normalization = "1";
      break;
    case Family::HeineFTilde: {
      ex.normalization = "Gamma_q(mu+alpha)Gamma_q(mu+beta)";
      const auto ka = alpha.as_integer();
      const auto kb = beta.as_integer();
      if (ka || kb) {
        const Scalar& other = ka ? beta : alpha;
        const auto k = static_cast<std::size_t>(ka ? *ka : *kb);
        ex.second_weight = qpochhammer_finite(spec.q.pow(mu), spec.q, k) /
                           qpochhammer_finite(spec.q.pow(mu + other), spec.q, k);
      } else if (!spec.q.is_exact()) {
        ex.second_weight = qgamma(mu + alpha, spec.q) * qgamma(mu + beta, spec.q) /
                           (qgamma(mu, spec.q) * qgamma(mu + alpha + beta, spec.q));
      } else {
        ex.enclosure_factors = enclosure_factors == 0 ? kDefaultEnclosureFactors : enclosure_factors;
        const Interval w = gamma_weight_enclosure(mu, alpha, beta, spec.q, ex.enclosure_factors);
        const unsigned digits = digits_for_bits(w.lo.precision());
        ex.second_weight.reset();
        ex.second_weight_bounds = std::make_pair(Scalar(w.lo, digits), Scalar(w.hi, digits));
      }
      break;
    }
    case Family::GNormalized: {
      ex.normalization = "P(mu)P(mu+beta)";
      const ParamVector& a = spec.family.a;
      const ParamVector& b = spec.family.b;
      if (spec.q.is_exact() && !alpha.as_integer()) {
        throw OffGridError("Exact g Turanian needs an integral shift; got alpha = " +
                           alpha.to_string() + ", beta = " + beta.to_string());
      }
      ex.first_weight = g_prefactor_ratio(a, b, mu + alpha, mu, spec.q);
      ex.second_weight = g_prefactor_ratio(a, b, mu + alpha + beta, mu + beta, spec.q);
      break;
    }
  }
  return ex;
}

TruncatedSeries turanian_series(const TuranianSpec& spec) {
  const TuranianExpansion ex = turanian_expansion(spec);
  if (!ex.second_weight) {
    throw OffGridError("Turanian coefficients are transcendental here; only their signs can be certified");
  }
  TruncatedSeries out = series_sub(series_scale(ex.first, ex.first_weight),
                                   series_scale(ex.second, *ex.second_weight));
  out.set_family_label("Delta[" + to_string(spec.family.kind) + "](mu=" + spec.mu.to_string() +
                       ", alpha=" + spec.alpha.to_string() + ", beta=" + spec.beta.to_string() +
                       ")/" + ex.normalization);
  return out;
}

SignReport delta_sign_certificate(const TuranianSpec& spec) {
  if (spec.family.kind != Family::HeineF) throw DomainError("delta certificate is for heine-f");
  return certify(spec, Verdict::AllStrictlyNeg, 1);
}

SignReport delta_tilde_sign_certificate(const TuranianSpec& spec) {
  if (spec.family.kind != Family::HeineFTilde) {
    throw DomainError("delta-tilde certificate is for heine-f-tilde");
  }
  return certify(spec, Verdict::AllStrictlyPos, 0);
}

SignReport gamma_sign_certificate(const TuranianSpec& spec) {
  if (spec.family.kind != Family::GNormalized) throw DomainError("gamma certificate is for g");
  const TheoremCase tc = theorem_case(spec.family.a, spec.family.b, spec.q);
  if (!tc.case_a && !tc.case_b) {
    throw HypothesisError("neither chain condition holds for a = (" + std::to_string(spec.family.a.size()) +
                          " entries), b = (" + std::to_string(spec.family.b.size()) + " entries)");
  }
  if (!degenerate(spec)) {
    const auto k = spec.alpha.as_integer();
    if (!k || *k < 0) throw HypothesisError("coefficient signs need alpha in N");
    if (spec.alpha > spec.beta + spec.beta.like(1)) {
      throw HypothesisError("coefficient signs need alpha <= beta + 1");
    }
  }
  SignReport report = certify(spec, tc.case_b ? Verdict::AllNonNeg : Verdict::AllNonPos, 0);
  report.chain_condition = tc.case_b ? "(b)" : "(a)";
  return report;
}

SignReport sign_certificate(const TuranianSpec& spec) {
  switch (spec.family.kind) {
    case Family::HeineF: return delta_sign_certificate(spec);
    case Family::HeineFTilde: return delta_tilde_sign_certificate(spec);
    case Family::GNormalized: return gamma_sign_certificate(spec);
  }
  throw DomainError("unknown family");
}

Scalar family_value(const FamilySpec& family, const Scalar& mu_in, const Scalar& x_in,
                    const QBase& q) {
  if (q.is_exact()) throw ModeMismatchError("family values involve Gamma_q; use Float mode");
  const Scalar mu = mu_in.in_mode(q.mode());
  const Scalar x = x_in.in_mode(q.mode());
  switch (family.kind) {
    case Family::HeineF:
      if (mu.sign() <= 0) throw DomainError("heine-f needs mu > 0");
      return evaluate_phi(heine_spec(mu, q), x);
    case Family::HeineFTilde:
      if (mu.sign() <= 0) throw DomainError("heine-f-tilde needs mu > 0");
      return evaluate_phi(heine_spec(mu, q), x) / qgamma(mu, q);
    case Family::GNormalized: {
      const PhiSpec spec = g_phi_spec(family.a, family.b, mu, q);
      const long e = 1 + static_cast<long>(spec.lower.size()) - static_cast<long>(spec.upper.size());
      if (e < 0) throw DomainError("g family needs t <= s+1");
      const Scalar z = (q.q() - q.one()).pow(e) * x;
      return g_prefactor(family.a, family.b, mu, q) * evaluate_phi(spec, z);
    }
  }
  throw DomainError("unknown family");
}

PointInequality turan_point_inequality(const FamilySpec& family, const Scalar& mu,
                                       const Scalar& x, const QBase& q,
                                       TuranDirection direction) {
  if (mu.sign() < 0) throw DomainError("Turan inequality needs mu >= 0");
  const Scalar one = mu.like(1);
  const Scalar f0 = family_value(family, mu, x, q);
  const Scalar f1 = family_value(family, mu + one, x, q);
  const Scalar f2 = family_value(family, mu + one + one, x, q);
  PointInequality out{false, f1, f1 * f1, f0 * f2};
  out.margin = out.middle_squared - out.outer_product;
  if (direction == TuranDirection::Inverse) out.margin = -out.margin;
  out.holds = out.margin.sign() >= 0;
  return out;
}

GridCheck logconcavity_grid_check(const FamilySpec& family, const std::vector<Scalar>& mu_grid,
                                  const Scalar& x, const QBase& q,
                                  std::optional<Convexity> direction) {
  if (mu_grid.size() < 3) throw DomainError("log-concavity check needs at least three grid points");
  if (x.sign() <= 0 || x >= x.like(1)) throw DomainError("log-concavity check needs 0 < x < 1");
  std::vector<Scalar> grid;
  for (const Scalar& mu : mu_grid) grid.push_back(mu.in_mode(q.mode()));
  const Scalar step = grid[1] - grid[0];
  if (step.sign() <= 0) throw DomainError("mu grid must be increasing");
  const Scalar tol = default_tolerance(q.mode());
  for (std::size_t i = 2; i < grid.size(); ++i) {
    if (abs(grid[i] - grid[i - 1] - step) > tol * step * step.like(100)) {
      throw DomainError("mu grid must be uniform");
    }
  }

  GridCheck out;
  if (direction) {
    out.direction = *direction;
  } else if (family.kind == Family::HeineF) {
    out.direction = Convexity::LogConvex;
  } else if (family.kind == Family::HeineFTilde) {
    out.direction = Convexity::LogConcave;
  } else {
    const TheoremCase tc = theorem_case(family.a, family.b, q);
    if (!tc.case_a && !tc.case_b) throw HypothesisError("no chain condition fixes the direction");
    out.direction = tc.case_b ? Convexity::LogConcave : Convexity::LogConvex;
  }

  std::vector<Scalar> values;
  values.reserve(mu_grid.size());
  for (const Scalar& mu : grid) values.push_back(family_value(family, mu, x, q));
  out.holds = true;
  for (std::size_t i = 0; i + 2 < values.size(); ++i) {
    const Scalar outer = values[i] * values[i + 2];
    const Scalar middle = values[i + 1] * values[i + 1];
    Scalar margin = out.direction == Convexity::LogConvex ? outer - middle : middle - outer;
    if (i == 0 || margin < out.min_margin) out.min_margin = margin;
    const Scalar slack = tol * max(abs(outer), abs(middle)) * margin.like(10);
    if (margin < -slack) {
      out.holds = false;
      if (!out.first_violation) out.first_violation = i;
    }
  }
  return out;
}

ShiftReduction integer_shift_reduction_check(const FamilySpec& family, const Scalar& mu,
                                             const Scalar& beta, long alpha_max, const QBase& q,
                                             std::size_t order) {
  ShiftReduction out;
  if (alpha_max < 1) throw DomainError("alpha_max must be at least 1");
  int base_direction = 0;
  out.holds = true;
  for (long k = 1; k <= alpha_max; ++k) {
    const Scalar alpha = Scalar::of(k, q.mode());
    if (family.kind == Family::GNormalized && alpha > beta.in_mode(q.mode()) + alpha.like(1)) break;
    TuranianSpec spec{family, mu, alpha, beta, q, order};
    SignReport report = sign_certificate(spec);
    int dir = predicted_direction(report.verdict);
    if (k == 1) {
      base_direction = dir;
    } else if (dir != base_direction && report.verdict != Verdict::Zero) {
      out.holds = false;
    }
    if (!report.matches_prediction) out.holds = false;
    out.reports.push_back(std::move(report));
  }
  return out;
}

}  // namespace qturan
