// Randomized structural checks. Each generator is seeded so failures replay.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qturan/analysis.hpp"
#include "qturan/conditions.hpp"
#include "qturan/identities.hpp"
#include "qturan/qcore.hpp"
#include "qturan/turanian.hpp"

using namespace qturan;

namespace {

constexpr int kInstances = 500;

ParamVector to_params(const std::vector<mpq_class>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(Scalar::exact(x));
  return ParamVector(out, true);
}

ParamVector to_params_signed(const std::vector<mpq_class>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(Scalar::exact(x));
  return ParamVector(out);
}

QBase random_base(oracle::Gen& gen) {
  // p in {1/2, 2/3, 3/4, 3/5}: half powers stay rational.
  static const long nums[] = {1, 2, 3, 3};
  static const long dens[] = {2, 3, 4, 5};
  const long i = gen.integer(0, 3);
  return QBase::from_p(Scalar::exact(nums[i], dens[i]));
}

mpq_class ratio_at(const std::vector<mpq_class>& c, const std::vector<mpq_class>& d, const mpq_class& y) {
  mpq_class num = 1, den = 1;
  for (const auto& x : c) num *= x + y;
  for (const auto& x : d) den *= x + y;
  return num / den;
}

}  // namespace

TEST(Properties, CauchyProductCommutes) {
  oracle::Gen gen(101);
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 8));
    std::vector<Scalar> a, b;
    for (std::size_t k = 0; k <= n; ++k) {
      a.push_back(Scalar::exact(gen.integer(-20, 20), gen.integer(1, 9)));
      b.push_back(Scalar::exact(gen.integer(-20, 20), gen.integer(1, 9)));
    }
    const TruncatedSeries ab = cauchy_product(TruncatedSeries(a), TruncatedSeries(b));
    const TruncatedSeries ba = cauchy_product(TruncatedSeries(b), TruncatedSeries(a));
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(ab[k], ba[k]) << "instance " << i;
  }
}

TEST(Properties, QPochhammerSplits) {
  oracle::Gen gen(102);
  for (int i = 0; i < kInstances; ++i) {
    const QBase q = random_base(gen);
    const Scalar a = Scalar::exact(gen.integer(-9, 9), gen.integer(1, 7));
    const auto m = static_cast<std::size_t>(gen.integer(0, 6));
    const auto n = static_cast<std::size_t>(gen.integer(0, 6));
    ASSERT_EQ(qpochhammer_finite(a, q, m + n),
              qpochhammer_finite(a, q, m) * qpochhammer_finite(a * q.pow(static_cast<long>(m)), q, n));
  }
}

TEST(Properties, TuranianSymmetricInShifts) {
  oracle::Gen gen(103);
  for (int i = 0; i < 60; ++i) {
    const QBase q = random_base(gen);
    const Scalar mu = Scalar::exact(gen.positive_half(3));
    const std::size_t order = 12;
    if (i % 2 == 0) {
      const Scalar alpha = Scalar::exact(gen.half(3));
      const Scalar beta = Scalar::exact(gen.half(3));
      const FamilySpec heine{Family::HeineF, {}, {}};
      const auto ab = turanian_series({heine, mu, alpha, beta, q, order});
      const auto ba = turanian_series({heine, mu, beta, alpha, q, order});
      for (std::size_t k = 0; k <= order; ++k) ASSERT_EQ(ab[k], ba[k]) << "instance " << i;
      continue;
    }
    // g is normalized by P(mu)P(mu+beta), which depends on the order of the
    // shifts; undo it with the exact ratio P(mu+beta)/P(mu).
    const Scalar alpha = Scalar::exact(gen.integer(0, 3));
    const Scalar beta = Scalar::exact(gen.integer(0, 3));
    const FamilySpec g{Family::GNormalized, to_params({gen.half(3), gen.half(3)}),
                       to_params({gen.positive_half(3), gen.positive_half(3)})};
    const auto ab = series_scale(turanian_series({g, mu, alpha, beta, q, order}),
                                 g_prefactor_ratio(g.a, g.b, mu + beta, mu, q));
    const auto ba = series_scale(turanian_series({g, mu, beta, alpha, q, order}),
                                 g_prefactor_ratio(g.a, g.b, mu + alpha, mu, q));
    for (std::size_t k = 0; k <= order; ++k) ASSERT_EQ(ab[k], ba[k]) << "instance " << i << " k " << k;
  }
}

TEST(Properties, HeineLeadingCoefficientVanishes) {
  oracle::Gen gen(104);
  for (int i = 0; i < kInstances; ++i) {
    const QBase q = random_base(gen);
    const TuranianSpec spec{{Family::HeineF, {}, {}}, Scalar::exact(gen.positive_half(4)),
                            Scalar::exact(gen.half(4)), Scalar::exact(gen.half(4)), q, 2};
    ASSERT_TRUE(turanian_series(spec)[0].is_zero());
  }
}

TEST(Properties, HeineSignOnRandomHalfGrid) {
  oracle::Gen gen(105);
  for (int i = 0; i < 40; ++i) {
    const QBase q = random_base(gen);
    const TuranianSpec spec{{Family::HeineF, {}, {}}, Scalar::exact(gen.positive_half(3)),
                            Scalar::exact(gen.positive_half(3)), Scalar::exact(gen.positive_half(3)), q, 25};
    const SignReport r = delta_sign_certificate(spec);
    ASSERT_EQ(r.verdict, Verdict::AllStrictlyNeg) << "instance " << i;
  }
}

TEST(Properties, ChainCrossMultiplicationMatchesDivision) {
  oracle::Gen gen(106);
  int compared = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto t = static_cast<std::size_t>(gen.integer(1, 4));
    const auto s = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = gen.integer_vector(t, 0, 12);
    const auto d = gen.integer_vector(s, 0, 12);
    if (t >= s) {
      if (const auto ref = oracle::increasing_chain_by_division(c, d)) {
        ASSERT_EQ(increasing_chain_holds(to_params(c), to_params(d)), *ref) << "instance " << i;
        ++compared;
      }
    }
    if (t <= s) {
      if (const auto ref = oracle::decreasing_chain_by_division(c, d)) {
        ASSERT_EQ(decreasing_chain_holds(to_params(c), to_params(d)), *ref) << "instance " << i;
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, kInstances / 2);
}

TEST(Properties, MajorizationWitnessImpliesChain) {
  oracle::Gen gen(107);
  int witnesses = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto t = static_cast<std::size_t>(gen.integer(1, 4));
    const auto s = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = gen.integer_vector(t, 1, 10);
    const auto d = gen.integer_vector(s, 1, 10);
    const ChainVerdict v = majorization_sufficiency(to_params(c), to_params(d));
    ASSERT_TRUE(v.implication_holds) << "instance " << i;
    if (!v.via_majorization) continue;
    ++witnesses;
    // With t = s the witness may point either way.
    const bool inc = t >= s && oracle::increasing_chain_by_division(c, d) == true;
    const bool dec = t <= s && oracle::decreasing_chain_by_division(c, d) == true;
    ASSERT_TRUE(inc || dec) << "instance " << i;
  }
  EXPECT_GT(witnesses, 50);
}

TEST(Properties, ChainImpliesMonotoneRatio) {
  oracle::Gen gen(108);
  std::vector<Scalar> grid;
  std::vector<mpq_class> raw;
  mpq_class y(1, 10);
  for (int k = 0; k < 50; ++k) {
    raw.push_back(y);
    grid.push_back(Scalar::exact(y));
    y *= mpq_class(6, 5);
  }
  int predicted = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto t = static_cast<std::size_t>(gen.integer(1, 4));
    const auto s = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = gen.integer_vector(t, 1, 10);
    const auto d = gen.integer_vector(s, 1, 10);
    const RtsProbe probe = rts_monotonicity_probe(to_params(c), to_params(d), grid);
    ASSERT_TRUE(probe.consistent) << "instance " << i;
    const bool inc = t >= s && oracle::increasing_chain_by_division(c, d) == true;
    const bool dec = t <= s && oracle::decreasing_chain_by_division(c, d) == true;
    if (!inc && !dec) continue;
    ++predicted;
    for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
      const mpq_class r0 = ratio_at(c, d, raw[k]);
      const mpq_class r1 = ratio_at(c, d, raw[k + 1]);
      if (inc) ASSERT_LE(r0, r1) << "instance " << i;
      if (dec) ASSERT_GE(r0, r1) << "instance " << i;
    }
  }
  EXPECT_GT(predicted, 100);
}

TEST(Properties, SupermajorizationReflexiveAndAntitone) {
  oracle::Gen gen(109);
  for (int i = 0; i < kInstances; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    auto c = gen.integer_vector(n, 1, 10);
    const auto d = gen.integer_vector(n, 1, 10);
    ASSERT_TRUE(weak_supermajorizes(to_params(d), to_params(d)));
    const bool before = weak_supermajorizes(to_params(d), to_params(c));
    ASSERT_EQ(before, oracle::supermajorized(d, c));
    // Raising the largest entry of c keeps the sort order.
    *std::max_element(c.begin(), c.end()) += gen.integer(1, 5);
    const bool after = weak_supermajorizes(to_params(d), to_params(c));
    ASSERT_TRUE(before || !after) << "instance " << i;
  }
}

TEST(Properties, ElementarySymmetricMatchesBruteForce) {
  oracle::Gen gen(110);
  for (int i = 0; i < kInstances; ++i) {
    const auto r = static_cast<std::size_t>(gen.integer(0, 8));
    const auto c = gen.integer_vector(r, -6, 6);
    const auto e = elementary_symmetric(to_params_signed(c));
    const auto ref = oracle::elementary_bruteforce(c);
    for (std::size_t k = 0; k <= r; ++k) ASSERT_EQ(e[k].as_rational(), ref[k]);
  }
}

TEST(Properties, NonNegativeSeriesAreMultiplicativelyConvex) {
  oracle::Gen gen(111);
  const Mode m = Mode::floating(30);
  for (int i = 0; i < 100; ++i) {
    std::vector<Scalar> coeffs;
    for (int k = 0; k < 8; ++k) coeffs.push_back(Scalar::of(mpq_class(gen.integer(0, 9), 1), m));
    const TruncatedSeries s(coeffs);
    const Evaluator f = [&](const Scalar& x) { return series_eval(s, x); };
    std::vector<std::pair<Scalar, Scalar>> pairs;
    for (int k = 0; k < 5; ++k) {
      pairs.emplace_back(Scalar::of(mpq_class(gen.integer(1, 100), 50), m),
                         Scalar::of(mpq_class(gen.integer(1, 100), 50), m));
    }
    ASSERT_TRUE(multiplicative_convexity_check(f, pairs).passes) << "instance " << i;
  }
}

TEST(Properties, NonNegativeInversePowerSumsAreCompletelyMonotone) {
  oracle::Gen gen(112);
  const Mode m = Mode::floating(30);
  std::vector<Scalar> grid;
  for (long k = 10; k <= 40; ++k) grid.push_back(Scalar::of(mpq_class(k, 10), m));
  for (int i = 0; i < 60; ++i) {
    std::vector<Scalar> gamma;
    for (int k = 0; k < 6; ++k) gamma.push_back(Scalar::of(mpq_class(gen.integer(0, 9), 1), m));
    const Evaluator f = [&](const Scalar& y) {
      Scalar sum = Scalar::of(0, m);
      for (std::size_t k = 0; k < gamma.size(); ++k) sum += gamma[k] * y.pow(-static_cast<long>(k + 1));
      return sum;
    };
    ASSERT_TRUE(complete_monotonicity_check(f, grid, 5).passes) << "instance " << i;
  }
}

TEST(Properties, LinearizationExactOnRandomHalfGrid) {
  oracle::Gen gen(113);
  for (int i = 0; i < 40; ++i) {
    const QBase q = random_base(gen);
    const Scalar mu = Scalar::exact(gen.positive_half(3));
    const Scalar alpha = Scalar::exact(gen.integer(1, 3));
    const Scalar beta = Scalar::exact(gen.half(3));
    ASSERT_TRUE(verify_linearization(mu, alpha, beta, q, 12).exact_zero) << "instance " << i;
    ASSERT_TRUE(verify_kummer_linearization(mu, alpha, beta, 12).exact_zero) << "instance " << i;
  }
}

TEST(Properties, ProductFormulaExactOnRandomHalfGrid) {
  oracle::Gen gen(114);
  for (int i = 0; i < 30; ++i) {
    const QBase q = random_base(gen);
    const Scalar nu = Scalar::exact(gen.positive_half(3));
    const Scalar eta = Scalar::exact(gen.positive_half(3));
    ASSERT_TRUE(verify_rahman_product(nu, eta, q, 10).exact_zero) << "instance " << i;
  }
}
