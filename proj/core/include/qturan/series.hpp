#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qturan/qbase.hpp"
#include "qturan/scalar.hpp"

namespace qturan {

/// Coefficients c_0..c_M of a power series, plus what is known about the
/// discarded tail.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Scalar> coeffs, std::string family_label = {});

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
  std::size_t order() const { return coeffs_.size() - 1; }
  Mode mode() const { return coeffs_.front().mode(); }

  const std::string& family_label() const { return family_label_; }
  void set_family_label(std::string label) { family_label_ = std::move(label); }

  const std::optional<std::string>& tail_note() const { return tail_note_; }
  void set_tail_note(std::string note) { tail_note_ = std::move(note); }

  /// R with |c_{n+1}| <= R |c_n| for every n >= order(), when known.
  const std::optional<Scalar>& ratio_bound() const { return ratio_bound_; }
  void set_ratio_bound(std::optional<Scalar> bound) { ratio_bound_ = std::move(bound); }

  /// Evaluation is only valid for |x| < radius (unset: entire).
  const std::optional<Scalar>& radius() const { return radius_; }
  void set_radius(std::optional<Scalar> radius) { radius_ = std::move(radius); }

  /// Keeps c_0..c_order. Tail metadata is dropped.
  TruncatedSeries truncated(std::size_t order) const;

 private:
  std::vector<Scalar> coeffs_;
  std::string family_label_;
  std::optional<std::string> tail_note_;
  std::optional<Scalar> ratio_bound_;
  std::optional<Scalar> radius_;
};

struct SeriesValue {
  Scalar value;
  /// Bound on |sum of the discarded terms|, when one could be established.
  std::optional<Scalar> tail_bound;
  std::size_t terms = 0;
};

/// Horner evaluation; DomainError outside the recorded radius.
Scalar series_eval(const TruncatedSeries& s, const Scalar& x);
/// Horner evaluation plus the geometric tail bound from ratio_bound().
SeriesValue series_eval_bounded(const TruncatedSeries& s, const Scalar& x);

TruncatedSeries series_sum(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Scalar& factor);
/// (AB)_m = sum_{k<=m} A_k B_{m-k}, truncated to the smaller order.
TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b);

/// Literal parameters of t-phi-s: upper a_1..a_t, lower b_1..b_s.
struct PhiSpec {
  ParamVector upper;
  ParamVector lower;
  QBase q;
};

/// Coefficients of t-phi-s(upper; lower; q; scale*z) in z:
///   (a;q)_n / ((b;q)_n (q;q)_n) * [(-1)^n q^(n choose 2)]^(1+s-t) * scale^n.
/// ParameterCollisionError if some (b_j;q)_n vanishes for n <= order.
TruncatedSeries tphis_series(const PhiSpec& spec, std::size_t order,
                             const std::optional<Scalar>& argument_scale = std::nullopt);

/// Sums t-phi-s at z until the rigorous tail bound is below
/// rel_tol*|partial sum|, or max_order terms were used.
SeriesValue tphis_evaluate(const PhiSpec& spec, const Scalar& z, const Scalar& rel_tol,
                           std::size_t max_order = 20000);

/// 2-phi-1(0, 0; q^mu; x) as a spec.
PhiSpec heine_spec(const Scalar& mu, const QBase& q);

/// f(mu;x) = 2-phi-1(0,0;q^mu;x): coefficients 1/((q^mu;q)_n (q;q)_n).
TruncatedSeries heine_f_series(const Scalar& mu, const QBase& q, std::size_t order);

/// f~(mu;x) = f(mu;x)/Gamma_q(mu), returned relative to the common factor
/// 1/Gamma_q(mu), i.e. with coefficients 1/((q^mu;q)_n (q;q)_n).
TruncatedSeries heine_f_tilde_series(const Scalar& mu, const QBase& q, std::size_t order);
/// f~ with the 1/Gamma_q(mu) factor applied (Float only).
TruncatedSeries heine_f_tilde_absolute(const Scalar& mu, const QBase& q, std::size_t order);

/// Gamma_q(a+mu)/Gamma_q(b+mu) with products over the entries (Float only).
Scalar g_prefactor(const ParamVector& a, const ParamVector& b, const Scalar& mu, const QBase& q);
/// P(mu)/P(reference) for P(m) = Gamma_q(a+m)/Gamma_q(b+m). Rational via
/// Gamma_q(x+k)/Gamma_q(x) = (q^x;q)_k/(1-q)^k when mu - reference is an
/// integer; otherwise Float only (OffGridError in Exact mode).
Scalar g_prefactor_ratio(const ParamVector& a, const ParamVector& b, const Scalar& mu,
                         const Scalar& reference, const QBase& q);

/// The spec t-phi-s(q^(a+mu); q^(b+mu)) underlying g(mu; .).
PhiSpec g_phi_spec(const ParamVector& a, const ParamVector& b, const Scalar& mu, const QBase& q);

/// Series in x of g(mu;x) = P(mu) t-phi-s(q^(a+mu); q^(b+mu); (q-1)^(1+s-t) x).
/// With a reference shift the coefficients are divided by P(reference);
/// without one, Float mode returns absolute coefficients and Exact mode uses
/// reference = mu.
TruncatedSeries g_series(const ParamVector& a, const ParamVector& b, const Scalar& mu,
                         const QBase& q, std::size_t order,
                         const std::optional<Scalar>& reference_mu = std::nullopt);

/// Coefficients 1/(b)_n of 1F1(1; b; x).
TruncatedSeries kummer_1f1_unit_top(const Scalar& b, std::size_t order);

}  // namespace qturan
