#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qturan/qbase.hpp"
#include "qturan/residual.hpp"
#include "qturan/scalar.hpp"
#include "qturan/series.hpp"

namespace qturan {

/// Both sides of the Rahman-type product formula as series in z:
///   2phi1(0,0;q^nu;z) 2phi1(0,0;q^eta;z)
///     = e_q(z) 4phi3(A, B, -A, -B; q^nu, q^eta, q^(nu+eta-1); z),
/// A = q^((nu+eta-1)/2), B = q^((nu+eta)/2). When q^(nu+eta-1) = 1 the
/// removable factor (A,-A;q)_k/(A^2;q)_k is replaced by its limit.
TruncatedSeries rahman_product_lhs(const Scalar& nu, const Scalar& eta, const QBase& q,
                                   std::size_t order);
TruncatedSeries rahman_product_rhs(const Scalar& nu, const Scalar& eta, const QBase& q,
                                   std::size_t order);
Residual verify_rahman_product(const Scalar& nu, const Scalar& eta, const QBase& q,
                               std::size_t order);

/// The coefficient form of the product formula, evaluated as two finite sums
/// for every m' <= m.
Residual verify_finite_sum_identity(const Scalar& nu, const Scalar& eta, const QBase& q,
                                    std::size_t m);

/// J2_alpha(y) against (-y^2/4;q)_inf J1_alpha(y) (Float mode).
Residual verify_connection_formula(const Scalar& alpha, const Scalar& y, const QBase& q);

/// Evaluates Rahman's J2-product form at y and compares it with the right
/// side of the product formula at z = -y^2/4 and at z = -y^4/4 (Float mode).
/// Both sides must converge and differ, so 0 < y < 2^(1/2) and y != 1.
struct SubstitutionProbe {
  Residual y_squared;
  Residual y_fourth;
  /// "-y^2/4", "-y^4/4", or "undecided".
  std::string consistent_substitution;
};
SubstitutionProbe rahman_substitution_probe(const Scalar& alpha, const Scalar& beta,
                                            const Scalar& y, const QBase& q);

enum class LinearizationPath { General, UnitShift };

/// Both sides of the linearization of the product difference of
/// H(c; x) = 2phi1(q, 0; q^c; x), whose coefficients are 1/(q^c;q)_n.
/// alpha must be a nonnegative integer; UnitShift is the separate alpha = 1
/// formula.
TruncatedSeries linearization_lhs(const Scalar& mu, long alpha, const Scalar& beta,
                                  const QBase& q, std::size_t order);
TruncatedSeries linearization_rhs(const Scalar& mu, long alpha, const Scalar& beta,
                                  const QBase& q, std::size_t order,
                                  LinearizationPath path = LinearizationPath::General);
Residual verify_linearization(const Scalar& mu, const Scalar& alpha, const Scalar& beta,
                              const QBase& q, std::size_t order,
                              LinearizationPath path = LinearizationPath::General);

/// The classical limit with 1F1(1; b; x) and rising factorials.
TruncatedSeries kummer_linearization_lhs(const Scalar& mu, long alpha, const Scalar& beta,
                                         std::size_t order);
TruncatedSeries kummer_linearization_rhs(const Scalar& mu, long alpha, const Scalar& beta,
                                         std::size_t order);
Residual verify_kummer_linearization(const Scalar& mu, const Scalar& alpha, const Scalar& beta,
                                     std::size_t order);

/// For each q: both sides of the q-linearization at argument (1-q)x divided by
/// (1-q)^alpha, compared with the matching sides of the classical identity at
/// x. The note warns when 1-q is below 10^(-digits/2).
std::vector<Residual> q_to_1_limit_study(const Scalar& mu, const Scalar& alpha, const Scalar& beta,
                                         const Scalar& x, const std::vector<Scalar>& q_sequence,
                                         unsigned digits);

/// sum_k [1/(Gamma_q(k+mu+1)Gamma_q(m-k+mu+beta)) - 1/(Gamma_q(k+mu)Gamma_q(m-k+mu+beta+1))]
///   = ((q^(mu+beta);q)_(m+1) - (q^mu;q)_(m+1)) /
///     (Gamma_q(mu+m+1) Gamma_q(mu+beta+m+1) (1-q)^(m+1))
/// for every m' <= m. Exact mode multiplies through by Gamma_q(mu)Gamma_q(mu+beta)
/// and uses Gamma_q ratios only; Float mode evaluates Gamma_q directly.
Residual verify_recqgamma(const Scalar& mu, const Scalar& beta, const QBase& q, std::size_t m);

/// Gamma_q(x+k)/Gamma_q(x) from qgamma against (q^x;q)_k/(1-q)^k (Float mode).
Residual verify_gamma_ratio(const Scalar& x, std::size_t k, const QBase& q);

}  // namespace qturan
