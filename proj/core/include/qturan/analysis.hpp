#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qturan/residual.hpp"
#include "qturan/scalar.hpp"
#include "qturan/series.hpp"
#include "qturan/turanian.hpp"

namespace qturan {

using Evaluator = std::function<Scalar(const Scalar&)>;

struct MonotonicityReport {
  bool passes = false;
  /// min_i (-1)^n Delta^n v_i for n = 0..max_order.
  std::vector<Scalar> min_margin_by_order;
  /// (order, grid index) of the first sign failure.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

/// Forward differences of f on a uniform grid: (-1)^n Delta^n f >= 0 for
/// n <= max_order, up to rounding slack in Float mode. DomainError when the
/// grid has at most max_order points or is not uniform.
MonotonicityReport complete_monotonicity_check(const Evaluator& f, const std::vector<Scalar>& y_grid,
                                               std::size_t max_order);

struct ConvexityReport {
  bool passes = false;
  /// sqrt(f(x1) f(x2)) - f(sqrt(x1 x2)) per pair.
  std::vector<Scalar> margins;
  std::optional<std::size_t> first_violation;
};

/// f(sqrt(x1 x2)) <= sqrt(f(x1) f(x2)) for each pair; margins are Float.
ConvexityReport multiplicative_convexity_check(const Evaluator& f,
                                               const std::vector<std::pair<Scalar, Scalar>>& pairs);

/// tau(dt) = atom * (unit mass at 0) + sum_{m>=1} coeffs[m-1] t^(m-1)/(m-1)! dt,
/// whose Laplace transform int e^(-t/x) tau(dt) is atom + sum_m coeffs[m-1] x^m.
struct MeasureDensity {
  Scalar atom;
  std::vector<Scalar> coeffs;
  std::size_t order() const { return coeffs.size(); }
};

/// The measure of a power series with coefficients scaled by `scale`.
MeasureDensity measure_from_series(const TruncatedSeries& s, const std::optional<Scalar>& scale = std::nullopt);

/// Density of the absolutely continuous part at t >= 0.
Scalar tau_density(const MeasureDensity& tau, const Scalar& t);

struct QuadSpec {
  /// Upper integration limit; chosen from the tail bound when unset.
  std::optional<Scalar> upper_limit;
  /// Absolute tolerance between successive tanh-sinh levels.
  Scalar tolerance;
  unsigned max_levels = 12;
};

struct QuadResult {
  Scalar value;
  Scalar error_estimate;
  Scalar upper_limit;
  unsigned levels = 0;
  bool converged = false;
};

/// Tanh-sinh quadrature of f on [0, T] (Float mode).
QuadResult tanh_sinh(const Evaluator& f, const Scalar& upper_limit, const Scalar& tolerance,
                     unsigned max_levels);

/// int_0^inf e^(-t/x) t^(m-1)/(m-1)! dt against x^m for m = 1..max_m: checks
/// the weight bookkeeping of the density before it is used.
Residual laplace_weight_oracle(std::size_t max_m, const Scalar& x, const QuadSpec& quad);

/// atom + int_0^T e^(-t/x) density(t) dt at each x, against `reference(x)`
/// or, without one, the series atom + sum coeffs[m-1] x^m.
Residual laplace_representation_check(const MeasureDensity& tau, const std::vector<Scalar>& x_grid,
                                      const QuadSpec& quad,
                                      const std::optional<Evaluator>& reference = std::nullopt);

/// For a g Turanian with t = s: the sign (+1 under condition (b), -1 under
/// (a)) that makes its coefficients nonnegative. DomainError when t != s,
/// HypothesisError when no chain condition holds.
int representation_sign(const TuranianSpec& spec);

/// x -> sign * Delta_g(alpha, beta; x), evaluated in Float mode.
Evaluator turanian_evaluator(const TuranianSpec& spec);

/// Measure of sign * Delta_g from its first spec.order coefficients (Float).
MeasureDensity turanian_measure(const TuranianSpec& spec);

}  // namespace qturan
