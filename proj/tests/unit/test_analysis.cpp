#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qturan/analysis.hpp"
#include "qturan/errors.hpp"

using namespace qturan;

namespace {

const Mode kF50 = Mode::floating(50);
Scalar fl(long n, long d = 1) { return Scalar::of(mpq_class(n, d), kF50); }
Scalar fs(const char* s) { return Scalar::parse(s, kF50); }

std::vector<Scalar> uniform(long from_num, long to_num, long den) {
  std::vector<Scalar> g;
  for (long k = from_num; k <= to_num; ++k) g.push_back(fl(k, den));
  return g;
}

TuranianSpec example1_spec(std::size_t order) {
  const ParamVector a({fl(2), fl(3)}, true);
  const ParamVector b({fl(1), fl(2)}, true);
  return TuranianSpec{{Family::GNormalized, a, b}, fl(1), fl(1), fl(2), QBase::from_q(fs("0.5")), order};
}

}  // namespace

TEST(CompleteMonotonicity, ConstantPassesWithZeroDifferences) {
  const auto r = complete_monotonicity_check([](const Scalar&) { return fl(3); }, uniform(10, 30, 10), 4);
  EXPECT_TRUE(r.passes);
  for (std::size_t n = 1; n < r.min_margin_by_order.size(); ++n) {
    EXPECT_TRUE(r.min_margin_by_order[n].is_zero());
  }
}

TEST(CompleteMonotonicity, DecayingExponential) {
  const auto r = complete_monotonicity_check([](const Scalar& y) { return exp(-y); }, uniform(10, 30, 10), 6);
  EXPECT_TRUE(r.passes);
  EXPECT_EQ(r.min_margin_by_order.size(), 7u);
}

TEST(CompleteMonotonicity, IncreasingFunctionFails) {
  const auto r = complete_monotonicity_check([](const Scalar& y) { return y; }, uniform(10, 30, 10), 2);
  EXPECT_FALSE(r.passes);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(r.first_violation->first, 1u);
}

TEST(CompleteMonotonicity, GridRequirements) {
  const Evaluator f = [](const Scalar& y) { return y; };
  EXPECT_THROW(complete_monotonicity_check(f, uniform(1, 3, 1), 6), DomainError);
  EXPECT_THROW(complete_monotonicity_check(f, {fl(1), fl(2), fl(4), fl(5)}, 1), DomainError);
}

TEST(CompleteMonotonicity, Example1Family) {
  const Evaluator delta = turanian_evaluator(example1_spec(60));
  const Evaluator at_inverse = [&](const Scalar& y) { return delta(fl(1) / y); };
  const auto r = complete_monotonicity_check(at_inverse, uniform(20, 100, 20), 6);
  EXPECT_TRUE(r.passes);
}

TEST(MultiplicativeConvexity, EqualPairsGiveEquality) {
  const auto r = multiplicative_convexity_check([](const Scalar& x) { return exp(x); }, {{fl(2), fl(2)}});
  EXPECT_TRUE(r.passes);
  EXPECT_LT(std::abs(r.margins[0].to_double()), 1e-45);
}

TEST(MultiplicativeConvexity, ExponentialAndExample1) {
  const auto e = multiplicative_convexity_check([](const Scalar& x) { return exp(x); },
                                                {{fl(1), fl(4)}, {fl(1, 2), fl(2)}});
  EXPECT_TRUE(e.passes);
  const auto g = multiplicative_convexity_check(turanian_evaluator(example1_spec(60)),
                                                {{fs("0.2"), fs("0.8")}, {fs("0.1"), fs("0.4")}});
  EXPECT_TRUE(g.passes);
  for (const auto& m : g.margins) EXPECT_GT(m.sign(), 0);
}

TEST(MultiplicativeConvexity, ConcaveFunctionFails) {
  const auto r = multiplicative_convexity_check([](const Scalar& x) { return fl(1) - exp(-x); },
                                                {{fl(1), fl(4)}});
  EXPECT_FALSE(r.passes);
}

TEST(Measure, ZeroDensity) {
  MeasureDensity tau{fl(0), {fl(0), fl(0)}};
  EXPECT_TRUE(tau_density(tau, fl(3)).is_zero());
  QuadSpec quad{fl(40), fs("1e-30"), 10};
  const Residual r = laplace_representation_check(tau, {fs("0.3")}, quad);
  EXPECT_LT(r.max_abs.to_double(), 1e-30);
}

TEST(Measure, SingleTermDensityBookkeeping) {
  // gamma_1 = 1: density 1, transform x; gamma_2 = 1: density t, transform x^2.
  MeasureDensity one{fl(0), {fl(1)}};
  MeasureDensity two{fl(0), {fl(0), fl(1)}};
  EXPECT_EQ(tau_density(two, fl(5)).to_double(), 5.0);
  QuadSpec quad{std::nullopt, fs("1e-35"), 12};
  for (const char* x : {"0.3", "0.6"}) {
    const Scalar xs = fs(x);
    const Residual r1 = laplace_representation_check(one, {xs}, quad, Evaluator([](const Scalar& x) { return x; }));
    EXPECT_LT(r1.max_rel.to_double(), 1e-30);
    const Residual r2 = laplace_representation_check(two, {xs}, quad, Evaluator([](const Scalar& x) { return x * x; }));
    EXPECT_LT(r2.max_rel.to_double(), 1e-30);
  }
}

TEST(Measure, WeightOracle) {
  QuadSpec quad{std::nullopt, fs("1e-35"), 12};
  const Residual r = laplace_weight_oracle(12, fs("0.6"), quad);
  EXPECT_LT(r.max_rel.to_double(), 1e-30);
}

TEST(Measure, FromSeriesSplitsAtom) {
  const TruncatedSeries s({fl(2), fl(3), fl(5)});
  const MeasureDensity tau = measure_from_series(s);
  EXPECT_EQ(tau.atom.to_double(), 2.0);
  ASSERT_EQ(tau.order(), 2u);
  EXPECT_EQ(tau.coeffs[1].to_double(), 5.0);
}

TEST(TanhSinh, PolynomialAndExponential) {
  const QuadResult p = tanh_sinh([](const Scalar& t) { return t * t; }, fl(3), fs("1e-40"), 12);
  EXPECT_TRUE(p.converged);
  EXPECT_LT(std::abs(p.value.to_double() - 9.0), 1e-12);
  EXPECT_LT(oracle::rel_diff(p.value, fl(9)), 1e-38);
  const QuadResult e = tanh_sinh([](const Scalar& t) { return exp(-t); }, fl(1), fs("1e-40"), 12);
  EXPECT_LT(oracle::rel_diff(e.value, fl(1) - exp(fl(-1))), 1e-38);
}

TEST(LaplaceRepresentation, Example1Family) {
  const TuranianSpec spec = example1_spec(40);
  const MeasureDensity tau = turanian_measure(spec);
  QuadSpec quad{fl(80), fs("1e-30"), 12};
  const Residual r = laplace_representation_check(tau, {fs("0.3"), fs("0.6")}, quad);
  EXPECT_LT(r.max_rel.to_double(), 1e-20);
}

TEST(RepresentationSign, Cases) {
  EXPECT_EQ(representation_sign(example1_spec(10)), 1);
  const ParamVector a({fl(1), fl(1)}, true);
  const ParamVector b({fl(2)}, true);
  TuranianSpec unbalanced{{Family::GNormalized, a, b}, fl(1), fl(1), fl(1), QBase::from_q(fs("0.5")), 10};
  EXPECT_THROW(representation_sign(unbalanced), DomainError);
}
