#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qturan/bessel.hpp"
#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"
#include "qturan/series.hpp"

using namespace qturan;

namespace {

Scalar ex(long n, long d = 1) { return Scalar::exact(n, d); }
QBase qb(long n, long d) { return QBase::from_q(ex(n, d)); }
const Mode kF50 = Mode::floating(50);
Scalar fl(long n, long d = 1) { return Scalar::of(mpq_class(n, d), kF50); }
Scalar fs(const char* s) { return Scalar::parse(s, kF50); }
QBase qf(long n, long d) { return QBase::from_q(fl(n, d)); }

ParamVector pv(std::initializer_list<Scalar> xs) { return ParamVector(std::vector<Scalar>(xs)); }

}  // namespace

TEST(TphisSeries, HandExpansion) {
  const QBase q = qb(1, 2);
  const TruncatedSeries s = tphis_series(PhiSpec{pv({ex(0), ex(0)}), pv({q.q()}), q}, 5);
  EXPECT_EQ(s[0].as_rational(), 1);
  EXPECT_EQ(s[1].as_rational(), 4);
}

TEST(TphisSeries, MatchingParametersCancel) {
  const QBase q = qb(2, 3);
  const TruncatedSeries s = tphis_series(PhiSpec{pv({q.q()}), pv({q.q()}), q}, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    const mpq_class qq(2, 3);
    const long k = static_cast<long>(n);
    const mpq_class expected = oracle::power(mpq_class(-1), k) * oracle::power(qq, k * (k - 1) / 2) /
                               oracle::qpoch(qq, qq, k);
    EXPECT_EQ(s[n].as_rational(), expected) << n;
  }
}

TEST(TphisSeries, SuperGeometricDecayWhenBalanced) {
  const QBase q = qb(1, 2);
  const TruncatedSeries s = tphis_series(PhiSpec{pv({ex(1, 3)}), pv({ex(1, 5)}), q}, 30);
  for (std::size_t n = 2; n < 30; ++n) {
    // The coefficient ratio tends to zero like q^n.
    const Scalar ratio = abs(s[n + 1] / s[n]);
    EXPECT_LT(ratio.to_double(), 4.0 * std::pow(0.5, static_cast<double>(n)));
  }
}

TEST(TphisSeries, UnitExcessRecordsRadius) {
  const QBase q = qb(1, 2);
  const TruncatedSeries s = tphis_series(PhiSpec{pv({ex(0), ex(0)}), pv({ex(1, 4)}), q}, 10);
  ASSERT_TRUE(s.radius().has_value());
  ASSERT_TRUE(s.tail_note().has_value());
  EXPECT_THROW(series_eval(s, ex(3, 2)), DomainError);
  EXPECT_NO_THROW(series_eval(s, ex(1, 2)));
}

TEST(TphisSeries, LowerParameterCollision) {
  const QBase q = qb(1, 2);
  EXPECT_THROW(tphis_series(PhiSpec{pv({ex(0)}), pv({ex(4)}), q}, 5), ParameterCollisionError);
}

TEST(TphisEvaluate, StopsWithRigorousTail) {
  const QBase q = qf(1, 2);
  const SeriesValue v = tphis_evaluate(heine_spec(fl(1), q), fs("0.25"), default_tolerance(kF50));
  ASSERT_TRUE(v.tail_bound.has_value());
  EXPECT_LT((*v.tail_bound / abs(v.value)).to_double(), 1e-49);
  // Term-by-term oracle.
  Scalar sum = fl(0), term = fl(1);
  for (long n = 0; n < 400; ++n) {
    sum += term;
    term = term * fs("0.25") / ((fl(1) - q.pow(n + 1)) * (fl(1) - q.pow(n + 1)));
  }
  EXPECT_LT(oracle::rel_diff(v.value, sum), 1e-48);
}

TEST(HeineF, Coefficients) {
  const TruncatedSeries s = heine_f_series(ex(1), qb(1, 2), 4);
  EXPECT_EQ(s[0].as_rational(), 1);
  EXPECT_EQ(s[1].as_rational(), 4);
  EXPECT_EQ(s[2].as_rational(), mpq_class(64, 9));
  for (long n = 0; n <= 4; ++n) EXPECT_EQ(s[n].as_rational(), oracle::heine_coeff(1, mpq_class(1, 2), n));
}

TEST(HeineF, ZeroMuIsAPole) {
  EXPECT_THROW(heine_f_series(ex(0), qb(1, 2), 4), Error);
}

TEST(HeineF, CoefficientsPositiveAndDecreasingInMu) {
  const QBase q = QBase::from_p(ex(3, 4));
  for (long mu2 = 1; mu2 < 8; ++mu2) {
    const TruncatedSeries lo = heine_f_series(ex(mu2, 2), q, 12);
    const TruncatedSeries hi = heine_f_series(ex(mu2 + 1, 2), q, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      EXPECT_GT(lo[n].sign(), 0);
      if (n > 0) EXPECT_GT(lo[n], hi[n]) << "mu=" << mu2 << "/2 n=" << n;
    }
  }
}

TEST(HeineFTilde, RelativeCoefficientsAgreeWithFloatGamma) {
  const TruncatedSeries rel = heine_f_tilde_series(ex(1), qb(1, 2), 3);
  EXPECT_EQ(rel[0].as_rational(), 1);
  EXPECT_EQ(rel[1].as_rational(), 4);
  const TruncatedSeries abs_series = heine_f_tilde_absolute(fl(1), qf(1, 2), 3);
  const Scalar gamma = qgamma(fl(1), qf(1, 2));
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_LT(oracle::rel_diff(abs_series[n] * gamma, rel[n].to_float(50)), 1e-45);
  }
}

TEST(GSeries, LeadingTermIsThePrefactor) {
  const QBase q = qf(1, 2);
  const ParamVector a({fl(2), fl(3)});
  const ParamVector b({fl(1), fl(2)});
  const TruncatedSeries s = g_series(a, b, fl(1, 2), q, 6);
  const Scalar expected = qgamma(fl(5, 2), q) * qgamma(fl(7, 2), q) /
                          (qgamma(fl(3, 2), q) * qgamma(fl(5, 2), q));
  EXPECT_LT(oracle::rel_diff(s[0], expected), 1e-45);
}

TEST(GSeries, EqualParametersCancel) {
  const QBase q = qb(1, 2);
  const ParamVector a({ex(3, 2)});
  const TruncatedSeries s = g_series(a, a, ex(1), q, 8);
  // Only the (q;q)_n and the argument scale (q-1)^n survive.
  const mpq_class qq(1, 2);
  for (long n = 0; n <= 8; ++n) {
    const mpq_class expected = oracle::power(qq, n * (n - 1) / 2) * oracle::power(mpq_class(1, 2), n) /
                               oracle::qpoch(qq, qq, n);
    EXPECT_EQ(s[n].as_rational(), expected) << n;
  }
}

TEST(GSeries, TermMatchesDirectFactors) {
  // a=(1,2), b=(1,1), mu=1, q=1/2: coefficient 1 relative to the prefactor.
  const QBase q = qb(1, 2);
  const TruncatedSeries s = g_series(ParamVector({ex(1), ex(2)}), ParamVector({ex(1), ex(1)}), ex(1), q, 3);
  const mpq_class qq(1, 2);
  // (q^2;q)_1 (q^3;q)_1 / ((q^2;q)_1 (q^2;q)_1 (q;q)_1), times (-1)(q-1) from
  // the balanced sign and the argument scale.
  const mpq_class expected = (1 - qq * qq) * (1 - qq * qq * qq) /
                             ((1 - qq * qq) * (1 - qq * qq) * (1 - qq)) * (1 - qq);
  EXPECT_EQ(s[1].as_rational(), expected);
}

TEST(GSeries, NegativeMuRejected) {
  EXPECT_THROW(g_series(ParamVector({ex(1)}), ParamVector({ex(1)}), ex(-1), qb(1, 2), 3), Error);
}

TEST(Kummer, UnitTopCoefficients) {
  const TruncatedSeries s = kummer_1f1_unit_top(ex(2), 4);
  EXPECT_EQ(s[0].as_rational(), 1);
  EXPECT_EQ(s[2].as_rational(), mpq_class(1, 6));
  // b = 1 gives the exponential series, 1/n!.
  const TruncatedSeries one = kummer_1f1_unit_top(ex(1), 6);
  mpz_class factorial = 1;
  for (long n = 0; n <= 6; ++n) {
    if (n > 0) factorial *= n;
    EXPECT_EQ(one[n].as_rational(), mpq_class(1, factorial)) << n;
  }
}

TEST(SeriesArithmetic, EvalSumAndProduct) {
  const TruncatedSeries s({ex(1), ex(2), ex(3)});
  EXPECT_EQ(series_eval(s, ex(2)).as_rational(), 17);
  const TruncatedSeries t({ex(1, 2), ex(-1), ex(0)});
  EXPECT_EQ(series_sum(s, t)[1].as_rational(), 1);
  EXPECT_EQ(series_sub(s, t)[0].as_rational(), mpq_class(1, 2));
  EXPECT_EQ(series_scale(s, ex(2))[2].as_rational(), 6);
  const TruncatedSeries st = cauchy_product(s, t);
  const TruncatedSeries ts = cauchy_product(t, s);
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(st[n], ts[n]);
  EXPECT_EQ(st[2].as_rational(), mpq_class(1, 2) * 3 - 2);
}

TEST(QBessel, TrivialArguments) {
  const QBase q = qf(1, 2);
  EXPECT_LT(std::abs(qbessel_j1(fl(0), fl(0), q).to_double() - 1.0), 1e-45);
  EXPECT_LT(std::abs(qbessel_j2(fl(0), fl(0), q).to_double() - 1.0), 1e-45);
  EXPECT_TRUE(qbessel_j1(fl(1), fl(0), q).is_zero());
  EXPECT_TRUE(qbessel_j2(fl(1), fl(0), q).is_zero());
}

TEST(QBessel, J1NeedsSmallArgument) {
  EXPECT_THROW(qbessel_j1(fl(0), fl(2), qf(1, 2)), DomainError);
}

TEST(ModifiedQBessel, SmallArgumentLimit) {
  const Scalar v = modified_qbessel_i1(fl(0), fs("1e-30"), qf(1, 2));
  EXPECT_LT(std::abs(v.to_double() - 1.0), 1e-40);
}

TEST(ModifiedQBessel, MatchesTermByTermSum) {
  const QBase q = qf(1, 2);
  const Scalar v = modified_qbessel_i1(fl(1), fl(1), q);
  // (1/2)/((1-q) Gamma_q(2)) * sum_n (1/4)^n / ((q^2;q)_n (q;q)_n), Gamma_q(2) = 1.
  Scalar sum = fl(0), term = fl(1);
  for (long n = 0; n < 300; ++n) {
    sum += term;
    term = term * fl(1, 4) / ((fl(1) - q.pow(n + 2)) * (fl(1) - q.pow(n + 1)));
  }
  const Scalar expected = fl(1, 2) / (fl(1) - q.q()) * sum;
  EXPECT_LT(oracle::rel_diff(v, expected), 1e-40);
}

TEST(ModifiedQBessel, Errors) {
  EXPECT_THROW(modified_qbessel_i1(fl(-1), fl(1), qf(1, 2)), Error);
  EXPECT_THROW(modified_qbessel_i1(fl(1), fl(3), qf(1, 2)), DomainError);
}
