#pragma once

#include <cstddef>

#include "qturan/qbase.hpp"
#include "qturan/scalar.hpp"

namespace qturan {

// Jackson q-Bessel functions and the first modified q-Bessel function. All
// three involve infinite products, so they are evaluated in Float mode; the
// q base decides the precision. max_order caps the number of series terms.

/// J1_alpha(y) = (y/2)^alpha (q^(alpha+1);q)_inf/(q;q)_inf
///               * 2phi1(0,0;q^(alpha+1); -y^2/4),  |y| < 2.
Scalar qbessel_j1(const Scalar& alpha, const Scalar& y, const QBase& q,
                  std::size_t max_order = 20000);

/// J2_alpha(y) = (y/2)^alpha (q^(alpha+1);q)_inf/(q;q)_inf
///               * 0phi1(-;q^(alpha+1); -y^2 q^(alpha+1)/4).
Scalar qbessel_j2(const Scalar& alpha, const Scalar& y, const QBase& q,
                  std::size_t max_order = 20000);

/// I1_nu(y) = (y/2)^nu / ((1-q)^nu Gamma_q(nu+1)) * 2phi1(0,0;q^(nu+1);(y/2)^2)
/// for 0 < y < 2 and nu > -1.
Scalar modified_qbessel_i1(const Scalar& nu, const Scalar& y, const QBase& q,
                           std::size_t max_order = 20000);

}  // namespace qturan
