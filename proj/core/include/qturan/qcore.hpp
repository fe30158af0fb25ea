#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qturan/qbase.hpp"
#include "qturan/scalar.hpp"

namespace qturan {

/// (a;q)_n = prod_{k<n} (1 - a q^k); 1 for n == 0.
Scalar qpochhammer_finite(const Scalar& a, const QBase& q, std::size_t n);

/// (a;q)_infinity to relative tolerance rel_tol (Float only).
///
/// Factors are multiplied until the geometric tail bound
///   |log prod_{k>=N} (1 - a q^k)| <= |a| q^N / ((1 - q)(1 - |a| q^N))
/// drops below rel_tol/4. A factor that vanishes exactly yields 0.
/// Exact inputs raise ModeMismatchError: the value is transcendental.
Scalar qpochhammer_infinite(const Scalar& a, const QBase& q, const Scalar& rel_tol);
Scalar qpochhammer_infinite(const Scalar& a, const QBase& q);

/// Gamma_q(z) = (1-q)^(1-z) (q;q)_inf / (q^z;q)_inf (Float only).
/// PoleError for z in {0, -1, -2, ...}.
Scalar qgamma(const Scalar& z, const QBase& q, const Scalar& rel_tol);
Scalar qgamma(const Scalar& z, const QBase& q);

/// Gamma_q(x+k)/Gamma_q(x) = (q^x;q)_k / (1-q)^k. Exact whenever q^x is.
Scalar qgamma_ratio(const Scalar& x, std::size_t k, const QBase& q);

/// Truncated first q-exponential sum_{k<=order} z^k/(q;q)_k, |z| < 1.
Scalar q_exponential(const Scalar& z, const QBase& q, std::size_t order);

/// e_0..e_r of the entries, by the one-pass recurrence
/// e_k <- e_k + c_j e_{k-1}.
std::vector<Scalar> elementary_symmetric(std::span<const Scalar> c);
std::vector<Scalar> elementary_symmetric(const ParamVector& c);

/// d weakly supermajorizes-precedes c: after sorting both ascending, every
/// prefix sum of c is at most the matching prefix sum of d.
bool weak_supermajorizes(const ParamVector& d, const ParamVector& c);

/// Rising factorial (mu)_n.
Scalar pochhammer_classical(const Scalar& mu, std::size_t n);

}  // namespace qturan
