#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qturan/qbase.hpp"
#include "qturan/scalar.hpp"
#include "qturan/series.hpp"

namespace qturan {

enum class Family { HeineF, HeineFTilde, GNormalized };
std::string to_string(Family f);

/// A one-parameter family mu -> F(mu; x). a and b are only used by
/// GNormalized.
struct FamilySpec {
  Family kind = Family::HeineF;
  ParamVector a;
  ParamVector b;
};

struct TuranianSpec {
  FamilySpec family;
  Scalar mu;
  Scalar alpha;
  Scalar beta;
  QBase q;
  std::size_t order = 60;
};

/// Delta = F(mu+alpha)F(mu+beta) - F(mu)F(mu+alpha+beta), up to a positive
/// normalizer N, written as
///   Delta / N = first_weight * first - second_weight * second
/// with first = F(mu+alpha)F(mu+beta) and second = F(mu)F(mu+alpha+beta)
/// taken without their Gamma-type prefactors.
///
///   HeineF       N = 1, both weights 1.
///   HeineFTilde  N = 1/(Gamma_q(mu+alpha)Gamma_q(mu+beta)), first weight 1,
///                second weight Gamma_q(mu+alpha)Gamma_q(mu+beta) /
///                (Gamma_q(mu)Gamma_q(mu+alpha+beta)).
///   GNormalized  N = P(mu)P(mu+beta), weights P(mu+alpha)/P(mu) and
///                P(mu+alpha+beta)/P(mu+beta), P(m) = Gamma_q(a+m)/Gamma_q(b+m).
///
/// When a weight is transcendental in Exact mode (HeineFTilde with neither
/// shift integral) it is replaced by a rigorous enclosure [lower, upper].
struct TuranianExpansion {
  TruncatedSeries first;
  TruncatedSeries second;
  Scalar first_weight;
  std::optional<Scalar> second_weight;
  /// Float enclosure of the second weight, used when second_weight is unset.
  std::optional<std::pair<Scalar, Scalar>> second_weight_bounds;
  std::size_t enclosure_factors = 0;
  std::string normalization;
};

/// Builds the expansion. HypothesisError for negative shifts or mu <= 0
/// (mu < 0 for GNormalized); OffGridError for GNormalized in Exact mode when
/// neither alpha nor beta is an integer.
/// enclosure_factors fixes the number of product factors used for an
/// enclosed weight (0: default of 64).
TuranianExpansion turanian_expansion(const TuranianSpec& spec, std::size_t enclosure_factors = 0);

/// Coefficients of Delta / N. OffGridError when the expansion needs an
/// enclosure (use the sign certificate instead).
TruncatedSeries turanian_series(const TuranianSpec& spec);

enum class Verdict { AllStrictlyPos, AllStrictlyNeg, AllNonNeg, AllNonPos, Zero, Mixed, Inconclusive };
std::string to_string(Verdict v);

/// Whether an observed verdict satisfies the predicted one.
bool verdict_satisfies(Verdict observed, Verdict predicted);

struct SignReport {
  Verdict verdict = Verdict::Inconclusive;
  Verdict predicted = Verdict::Inconclusive;
  bool matches_prediction = false;
  /// First coefficient index included in the verdict (1 for HeineF, where the
  /// leading coefficient always cancels; 0 otherwise).
  std::size_t first_index = 0;
  /// The leading coefficient is exactly zero.
  bool leading_zero = false;
  /// First index whose sign contradicts the prediction.
  std::optional<std::size_t> first_violation;
  /// Smallest coefficient in the predicted direction (a certified lower end
  /// when the coefficients carry an enclosure).
  Scalar min_margin;
  std::size_t order_checked = 0;
  /// "none", "(a)" or "(b)" for GNormalized.
  std::string chain_condition = "none";
  std::size_t enclosure_factors = 0;
  std::string note;
};

/// Coefficient signs of Delta_f; the prediction is AllStrictlyNeg.
SignReport delta_sign_certificate(const TuranianSpec& spec);
/// Coefficient signs of Delta_f~; the prediction is AllStrictlyPos.
SignReport delta_tilde_sign_certificate(const TuranianSpec& spec);
/// Coefficient signs of Delta_g. Requires alpha in N with alpha <= beta + 1
/// and a chain condition that applies (HypothesisError otherwise); the
/// prediction is AllNonNeg under (b) and AllNonPos under (a).
SignReport gamma_sign_certificate(const TuranianSpec& spec);
/// Dispatches on spec.family.kind.
SignReport sign_certificate(const TuranianSpec& spec);

/// F(mu; x) in Float mode (tail below the working precision).
Scalar family_value(const FamilySpec& family, const Scalar& mu, const Scalar& x, const QBase& q);

enum class TuranDirection { Direct, Inverse };
std::string to_string(TuranDirection d);

struct PointInequality {
  bool holds = false;
  /// F(mu+1)^2 - F(mu)F(mu+2) for Direct, its negative for Inverse.
  Scalar margin;
  Scalar middle_squared;
  Scalar outer_product;
};

/// Direct: F(mu+1)^2 >= F(mu)F(mu+2). Inverse: the reverse.
PointInequality turan_point_inequality(const FamilySpec& family, const Scalar& mu,
                                       const Scalar& x, const QBase& q,
                                       TuranDirection direction);

enum class Convexity { LogConvex, LogConcave };

struct GridCheck {
  bool holds = false;
  Convexity direction = Convexity::LogConvex;
  Scalar min_margin;
  std::optional<std::size_t> first_violation;
};

/// Discrete midpoint test F(m_i)F(m_{i+2}) vs F(m_{i+1})^2 on a uniform grid;
/// HeineF is expected log-convex, HeineFTilde and g log-concave unless the
/// caller overrides the direction.
GridCheck logconcavity_grid_check(const FamilySpec& family, const std::vector<Scalar>& mu_grid,
                                  const Scalar& x, const QBase& q,
                                  std::optional<Convexity> direction = std::nullopt);

struct ShiftReduction {
  bool holds = false;
  /// One report per alpha = 1..alpha_max.
  std::vector<SignReport> reports;
};

/// Certifies alpha = 1 and checks that alpha = 2..alpha_max reproduce its
/// sign direction. GNormalized stops at alpha <= beta + 1.
ShiftReduction integer_shift_reduction_check(const FamilySpec& family, const Scalar& mu,
                                             const Scalar& beta, long alpha_max, const QBase& q,
                                             std::size_t order);

}  // namespace qturan
