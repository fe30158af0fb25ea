// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only if
// every line passes. Tolerances are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qturan/analysis.hpp"
#include "qturan/bessel.hpp"
#include "qturan/conditions.hpp"
#include "qturan/errors.hpp"
#include "qturan/identities.hpp"
#include "qturan/qcore.hpp"
#include "qturan/turanian.hpp"

using namespace qturan;

namespace {

constexpr unsigned kDigits = 50;
constexpr double kPointMargin = 1e-30;
constexpr double kBesselRel = 1e-35;
constexpr double kLaplaceRel = 1e-20;
constexpr std::size_t kSignOrder = 60;
constexpr int kRandomInstances = 500;

const Mode kF = Mode::floating(kDigits);

Scalar ex(long n, long d = 1) { return Scalar::exact(n, d); }
Scalar fl(long n, long d = 1) { return Scalar::of(mpq_class(n, d), kF); }
Scalar fs(const char* s) { return Scalar::parse(s, kF); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %-44s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// Collects the first failure of a grid run.
struct Tally {
  int instances = 0;
  int failed = 0;
  std::string first;
  void check(bool ok, const std::string& where) {
    ++instances;
    if (!ok && failed++ == 0) first = where;
  }
  Outcome outcome(const std::string& extra = {}) const {
    std::string d = std::to_string(instances) + " instances, " + std::to_string(failed) + " failures";
    if (failed) d += ", first at " + first;
    if (!extra.empty()) d += ", " + extra;
    return {failed == 0 && instances > 0, d};
  }
};

std::string point(std::initializer_list<std::pair<const char*, Scalar>> xs) {
  std::string s;
  for (const auto& [k, v] : xs) s += (s.empty() ? "" : " ") + std::string(k) + "=" + v.to_string();
  return s;
}

const std::vector<Scalar> kHalfGrid{ex(1, 2), ex(1), ex(3, 2), ex(2)};

// ---- identities (Exact) ----

Outcome linearization_suite() {
  Tally t;
  for (const auto& q : {QBase::from_q(ex(1, 2)), QBase::from_q(ex(3, 4))}) {
    for (const auto& mu : {ex(1, 2), ex(1), ex(2)}) {
      for (long alpha = 1; alpha <= 3; ++alpha) {
        for (const auto& beta : {ex(0), ex(1, 2), ex(1), ex(2)}) {
          const Residual r = verify_linearization(mu, ex(alpha), beta, q, 30);
          t.check(r.exact_zero && r.order_checked == 30,
                  point({{"q", q.q()}, {"mu", mu}, {"alpha", ex(alpha)}, {"beta", beta}}));
        }
      }
    }
  }
  return t.outcome();
}

Outcome finite_sum_suite() {
  Tally t;
  for (const auto& p : {ex(1, 2), ex(3, 4)}) {
    const QBase q = QBase::from_p(p);
    for (const auto& nu : kHalfGrid) {
      for (const auto& eta : kHalfGrid) {
        t.check(verify_finite_sum_identity(nu, eta, q, 20).exact_zero,
                point({{"p", p}, {"nu", nu}, {"eta", eta}}));
      }
    }
  }
  return t.outcome("m <= 20");
}

Outcome product_formula_suite() {
  Tally t;
  for (const auto& p : {ex(1, 2), ex(3, 4)}) {
    const QBase q = QBase::from_p(p);
    for (const auto& nu : kHalfGrid) {
      for (const auto& eta : kHalfGrid) {
        const Residual r = verify_rahman_product(nu, eta, q, 25);
        t.check(r.exact_zero && r.order_checked == 25, point({{"p", p}, {"nu", nu}, {"eta", eta}}));
      }
    }
  }
  return t.outcome("M = 25");
}

Outcome qgamma_sum_suite() {
  Tally t;
  for (const auto& q : {QBase::from_q(ex(1, 2)), QBase::from_q(ex(1, 4))}) {
    for (const auto& mu : {ex(1, 2), ex(1), ex(3, 2)}) {
      for (const auto& beta : {ex(1, 2), ex(1), ex(3, 2)}) {
        t.check(verify_recqgamma(mu, beta, q, 10).exact_zero,
                point({{"q", q.q()}, {"mu", mu}, {"beta", beta}}));
      }
    }
  }
  return t.outcome("m <= 10");
}

Outcome kummer_suite() {
  Tally t;
  for (const auto& mu : {ex(1, 2), ex(1), ex(3, 2)}) {
    for (long alpha = 1; alpha <= 3; ++alpha) {
      for (const auto& beta : {ex(0), ex(1, 2), ex(1)}) {
        const Residual r = verify_kummer_linearization(mu, ex(alpha), beta, 30);
        t.check(r.exact_zero && r.order_checked == 30,
                point({{"mu", mu}, {"alpha", ex(alpha)}, {"beta", beta}}));
      }
    }
  }
  return t.outcome("M = 30");
}

// ---- coefficient signs (Exact, 1 <= m <= 60) ----

Outcome sign_grid(Family family, Verdict required) {
  Tally t;
  const FamilySpec f{family, {}, {}};
  const std::vector<Scalar> grid{ex(1, 2), ex(1), ex(2)};
  for (const auto& qv : {ex(1, 4), ex(1, 2), ex(3, 4)}) {
    const QBase q = QBase::from_q(qv);
    for (const auto& mu : grid) {
      for (const auto& alpha : grid) {
        for (const auto& beta : grid) {
          const SignReport r = sign_certificate({f, mu, alpha, beta, q, kSignOrder});
          const bool ok = r.verdict == required && r.order_checked == kSignOrder &&
                          !r.first_violation && r.first_index <= 1;
          t.check(ok, point({{"q", qv}, {"mu", mu}, {"alpha", alpha}, {"beta", beta}}) + " -> " +
                          to_string(r.verdict));
        }
      }
    }
  }
  return t.outcome();
}

Outcome heine_sign_suite() {
  const auto s = turanian_series({{Family::HeineF, {}, {}}, ex(1), ex(1), ex(1), QBase::from_q(ex(1, 2)), 1});
  Outcome o = sign_grid(Family::HeineF, Verdict::AllStrictlyNeg);
  const bool spot = s[1].as_rational() == mpq_class(-20, 21);
  o.pass = o.pass && spot;
  o.detail += ", delta_1 = " + s[1].to_string();
  return o;
}

Outcome example_suite(const FamilySpec& f, Verdict required) {
  Tally t;
  const QBase q = QBase::from_q(ex(1, 2));
  for (const auto& mu : {ex(0), ex(1, 2), ex(1), ex(2)}) {
    for (long alpha = 1; alpha <= 3; ++alpha) {
      for (long beta = alpha - 1; beta <= alpha + 1; ++beta) {
        const SignReport r = gamma_sign_certificate({f, mu, ex(alpha), ex(beta), q, kSignOrder});
        const bool ok = verdict_satisfies(r.verdict, required) && r.order_checked == kSignOrder &&
                        !r.first_violation;
        t.check(ok, point({{"mu", mu}, {"alpha", ex(alpha)}, {"beta", ex(beta)}}) + " -> " +
                        to_string(r.verdict));
      }
    }
  }
  return t.outcome();
}

FamilySpec example1(const Mode& m) {
  return {Family::GNormalized, ParamVector({Scalar::of(2, m), Scalar::of(3, m)}, true),
          ParamVector({Scalar::of(1, m), Scalar::of(2, m)}, true)};
}
FamilySpec example2(const Mode& m) {
  return {Family::GNormalized, ParamVector({Scalar::of(1, m), Scalar::of(1, m), Scalar::of(1, m)}, true),
          ParamVector({Scalar::of(2, m), Scalar::of(2, m)}, true)};
}

// ---- Float suites ----

Outcome point_inequality_suite() {
  Tally t;
  const QBase q = QBase::from_q(fs("0.5"));
  double smallest = 1e300;
  for (const auto& [family, direction] : {std::pair{example1(kF), TuranDirection::Direct},
                                          std::pair{example2(kF), TuranDirection::Inverse}}) {
    for (const auto& mu : {fl(1, 2), fl(1), fl(2)}) {
      for (const char* x : {"0.1", "0.5", "0.9"}) {
        const PointInequality p = turan_point_inequality(family, mu, fs(x), q, direction);
        smallest = std::min(smallest, p.margin.to_double());
        t.check(p.holds && p.margin.to_double() > kPointMargin,
                to_string(direction) + " " + point({{"mu", mu}, {"x", fs(x)}}));
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "smallest margin %.3e", smallest);
  return t.outcome(buf);
}

Outcome bessel_suite() {
  Tally t;
  double worst = 0;
  for (const char* qs : {"0.3", "0.5", "0.8"}) {
    const QBase q = QBase::from_q(fs(qs));
    for (const auto& alpha : {fl(0), fl(1, 2), fl(1), fl(3, 2)}) {
      for (const char* y : {"0.1", "0.5", "1.0", "1.9"}) {
        const Residual r = verify_connection_formula(alpha, fs(y), q);
        worst = std::max(worst, r.max_rel.to_double());
        t.check(r.max_rel.to_double() < kBesselRel, point({{"q", fs(qs)}, {"alpha", alpha}, {"y", fs(y)}}));
      }
    }
  }
  // f(mu; x) recovered from the modified q-Bessel function at y = 2 sqrt(x).
  const QBase q = QBase::from_q(fs("0.5"));
  for (const auto& mu : {fl(1, 2), fl(1), fl(2)}) {
    for (const char* xs : {"0.1", "0.5", "0.9"}) {
      const Scalar x = fs(xs);
      const Scalar nu = mu - fl(1);
      const Scalar i1 = modified_qbessel_i1(nu, fl(2) * sqrt(x), q);
      const Scalar back = i1 * real_pow(fl(1) - q.q(), nu) * qgamma(mu, q) / real_pow(x, nu / fl(2));
      const Scalar direct = family_value({Family::HeineF, {}, {}}, mu, x, q);
      const double rel = oracle::rel_diff(back, direct);
      worst = std::max(worst, rel);
      t.check(rel < kBesselRel, "round trip " + point({{"mu", mu}, {"x", x}}));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst max_rel %.3e", worst);
  return t.outcome(buf);
}

TuranianSpec example1_float_spec(std::size_t order) {
  return {example1(kF), fl(1), fl(1), fl(2), QBase::from_q(fs("0.5")), order};
}

Outcome monotonicity_suite() {
  const Evaluator delta = turanian_evaluator(example1_float_spec(kSignOrder));
  std::vector<Scalar> grid;
  for (long k = 20; k <= 100; ++k) grid.push_back(fl(k, 20));
  const MonotonicityReport cm =
      complete_monotonicity_check([&](const Scalar& y) { return delta(fl(1) / y); }, grid, 6);
  bool margins_ok = cm.min_margin_by_order.size() == 7;
  for (const auto& m : cm.min_margin_by_order) margins_ok = margins_ok && m.sign() >= 0;

  oracle::Gen gen(2024);
  std::vector<std::pair<Scalar, Scalar>> pairs;
  for (int i = 0; i < 20; ++i) {
    pairs.emplace_back(Scalar::of(mpq_class(gen.integer(1, 400), 100), kF),
                       Scalar::of(mpq_class(gen.integer(1, 400), 100), kF));
  }
  const ConvexityReport mc = multiplicative_convexity_check(delta, pairs);
  const bool pass = cm.passes && margins_ok && mc.passes;
  return {pass, std::string("differences to order 6 ") + (cm.passes && margins_ok ? "nonnegative" : "FAILED") +
                    " on 81 points, multiplicative convexity " + (mc.passes ? "holds" : "FAILS") +
                    " on 20 random pairs"};
}

Outcome laplace_suite() {
  QuadSpec quad{fl(80), fs("1e-30"), 12};
  const Residual weights = laplace_weight_oracle(40, fs("0.6"), QuadSpec{std::nullopt, fs("1e-35"), 12});
  if (!(weights.max_rel.to_double() < 1e-25)) {
    return {false, "density weight oracle failed: max_rel " + weights.max_rel.to_string()};
  }
  const MeasureDensity tau = turanian_measure(example1_float_spec(40));
  const Residual r = laplace_representation_check(tau, {fs("0.3"), fs("0.6")}, quad);
  char buf[96];
  std::snprintf(buf, sizeof buf, "weight oracle %.1e, representation max_rel %.3e",
                weights.max_rel.to_double(), r.max_rel.to_double());
  return {r.max_rel.to_double() < kLaplaceRel, buf};
}

Outcome q_limit_suite() {
  const auto study = q_to_1_limit_study(fl(1), fl(1), fl(1), fl(1, 2), {fs("0.9"), fs("0.99"), fs("0.999")}, kDigits);
  bool decreasing = study.size() == 3;
  std::string d = "deviations";
  for (std::size_t i = 0; i < study.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.4e", study[i].max_rel.to_double());
    d += buf;
    if (i > 0) decreasing = decreasing && study[i].max_rel < study[i - 1].max_rel;
  }
  return {decreasing, d};
}

// ---- structural ----

QBase random_base(oracle::Gen& gen) {
  static const long nums[] = {1, 2, 3};
  static const long dens[] = {2, 3, 4};
  const long i = gen.integer(0, 2);
  return QBase::from_p(ex(nums[i], dens[i]));
}

ParamVector params(const std::vector<mpq_class>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(Scalar::exact(x));
  return ParamVector(out, true);
}

Outcome cauchy_symmetry() {
  oracle::Gen gen(1);
  Tally t;
  for (int i = 0; i < kRandomInstances; ++i) {
    std::vector<Scalar> a, b;
    const long n = gen.integer(0, 10);
    for (long k = 0; k <= n; ++k) {
      a.push_back(ex(gen.integer(-50, 50), gen.integer(1, 12)));
      b.push_back(ex(gen.integer(-50, 50), gen.integer(1, 12)));
    }
    const auto ab = cauchy_product(TruncatedSeries(a), TruncatedSeries(b));
    const auto ba = cauchy_product(TruncatedSeries(b), TruncatedSeries(a));
    bool same = true;
    for (long k = 0; k <= n; ++k) same = same && ab[k] == ba[k];
    t.check(same, "instance " + std::to_string(i));
  }
  return t.outcome();
}

Outcome shift_symmetry() {
  oracle::Gen gen(2);
  Tally t;
  const FamilySpec heine{Family::HeineF, {}, {}};
  for (int i = 0; i < kRandomInstances; ++i) {
    const QBase q = random_base(gen);
    const Scalar mu = Scalar::exact(gen.positive_half(3));
    const Scalar alpha = Scalar::exact(gen.half(3));
    const Scalar beta = Scalar::exact(gen.half(3));
    const auto ab = turanian_series({heine, mu, alpha, beta, q, 8});
    const auto ba = turanian_series({heine, mu, beta, alpha, q, 8});
    bool same = true;
    for (std::size_t k = 0; k <= 8; ++k) same = same && ab[k] == ba[k];
    t.check(same, "instance " + std::to_string(i));
  }
  return t.outcome();
}

Outcome leading_coefficient() {
  oracle::Gen gen(3);
  Tally t;
  for (int i = 0; i < kRandomInstances; ++i) {
    const QBase q = random_base(gen);
    const auto s = turanian_series({{Family::HeineF, {}, {}}, Scalar::exact(gen.positive_half(4)),
                                    Scalar::exact(gen.half(4)), Scalar::exact(gen.half(4)), q, 1});
    t.check(s[0].is_zero(), "instance " + std::to_string(i));
  }
  return t.outcome("heine-f; the normalized families keep a nonzero leading term");
}

Outcome chain_equivalence() {
  oracle::Gen gen(4);
  Tally t;
  for (int i = 0; i < kRandomInstances; ++i) {
    const auto ts = static_cast<std::size_t>(gen.integer(1, 4));
    const auto ss = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = gen.integer_vector(ts, 1, 15);
    const auto d = gen.integer_vector(ss, 1, 15);
    bool ok = true;
    if (ts >= ss) ok = ok && oracle::increasing_chain_by_division(c, d) == increasing_chain_holds(params(c), params(d));
    if (ts <= ss) ok = ok && oracle::decreasing_chain_by_division(c, d) == decreasing_chain_holds(params(c), params(d));
    t.check(ok, "instance " + std::to_string(i));
  }
  return t.outcome();
}

Outcome majorization_implication() {
  oracle::Gen gen(5);
  Tally t;
  int witnesses = 0;
  for (int i = 0; i < kRandomInstances; ++i) {
    const auto ts = static_cast<std::size_t>(gen.integer(1, 4));
    const auto ss = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = gen.integer_vector(ts, 1, 10);
    const auto d = gen.integer_vector(ss, 1, 10);
    const ChainVerdict v = majorization_sufficiency(params(c), params(d));
    bool ok = v.implication_holds;
    if (v.via_majorization) {
      ++witnesses;
      const bool inc = ts >= ss && oracle::increasing_chain_by_division(c, d) == true;
      const bool dec = ts <= ss && oracle::decreasing_chain_by_division(c, d) == true;
      ok = ok && (inc || dec);
    }
    t.check(ok, "instance " + std::to_string(i));
  }
  return t.outcome(std::to_string(witnesses) + " witnesses");
}

Outcome monotone_ratio_implication() {
  oracle::Gen gen(6);
  Tally t;
  std::vector<Scalar> grid;
  mpq_class y(1, 20);
  for (int k = 0; k < 50; ++k, y *= mpq_class(5, 4)) grid.push_back(Scalar::exact(y));
  int predicted = 0;
  for (int i = 0; i < kRandomInstances; ++i) {
    const auto ts = static_cast<std::size_t>(gen.integer(1, 4));
    const auto ss = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = gen.integer_vector(ts, 1, 10);
    const auto d = gen.integer_vector(ss, 1, 10);
    const RtsProbe p = rts_monotonicity_probe(params(c), params(d), grid);
    if (p.predicted) ++predicted;
    t.check(p.consistent, "instance " + std::to_string(i));
  }
  return t.outcome(std::to_string(predicted) + " with a chain condition");
}

}  // namespace

int main() {
  std::printf("qturan acceptance (Float digits %u, sign order %zu)\n", kDigits, kSignOrder);
  criterion("identities/linearization-exact", linearization_suite);
  criterion("identities/finite-sum-exact", finite_sum_suite);
  criterion("identities/product-formula-exact", product_formula_suite);
  criterion("identities/qgamma-sum-exact", qgamma_sum_suite);
  criterion("identities/kummer-linearization-exact", kummer_suite);
  criterion("signs/heine-f-strictly-negative", heine_sign_suite);
  criterion("signs/heine-f-tilde-strictly-positive",
            [] { return sign_grid(Family::HeineFTilde, Verdict::AllStrictlyPos); });
  criterion("signs/g-upper-2-3-lower-1-2-nonnegative",
            [] { return example_suite(example1(Mode::exact()), Verdict::AllNonNeg); });
  criterion("signs/g-upper-1-1-1-lower-2-2-nonpositive",
            [] { return example_suite(example2(Mode::exact()), Verdict::AllNonPos); });
  criterion("float/turan-point-inequalities", point_inequality_suite);
  criterion("float/q-bessel-connection-and-round-trip", bessel_suite);
  criterion("float/complete-monotonicity-and-convexity", monotonicity_suite);
  criterion("float/laplace-representation", laplace_suite);
  criterion("float/q-to-1-deviation-decreasing", q_limit_suite);
  criterion("structure/cauchy-product-symmetry", cauchy_symmetry);
  criterion("structure/turanian-shift-symmetry", shift_symmetry);
  criterion("structure/heine-leading-coefficient-zero", leading_coefficient);
  criterion("structure/chain-cross-multiplication", chain_equivalence);
  criterion("structure/majorization-implies-chain", majorization_implication);
  criterion("structure/chain-implies-monotone-ratio", monotone_ratio_implication);
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
