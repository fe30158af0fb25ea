#pragma once

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "qturan/bigfloat.hpp"

namespace qturan {

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt d).
///
/// The radicand d is a positive integer that is not a perfect square, with
/// small square factors pulled out. Rational values carry b == 0 and d == 1;
/// such values combine with any field. Two irrational values over different
/// radicands cannot be combined and raise ModeMismatchError.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(mpq_class value) : a_(std::move(value)) {  // NOLINT
    a_.canonicalize();
  }
  QuadraticNumber(mpq_class a, mpq_class b, mpz_class radicand);

  /// sqrt(r) for a nonnegative rational r, exactly.
  static QuadraticNumber sqrt_of(const mpq_class& r);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Exact sign in {-1, 0, 1}.
  int sign() const;

  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber l, const QuadraticNumber& r) { return l += r; }
  friend QuadraticNumber operator-(QuadraticNumber l, const QuadraticNumber& r) { return l -= r; }
  friend QuadraticNumber operator*(QuadraticNumber l, const QuadraticNumber& r) { return l *= r; }
  friend QuadraticNumber operator/(QuadraticNumber l, const QuadraticNumber& r) { return l /= r; }
  friend QuadraticNumber operator-(const QuadraticNumber& x);

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

  QuadraticNumber pow(long exponent) const;
  QuadraticNumber conjugate() const;

  BigFloat to_bigfloat(mpfr_prec_t bits) const;
  /// "num/den" for rationals, "a+b*sqrt(d)" otherwise.
  std::string to_string() const;

 private:
  // Radicand shared by two operands; throws on incompatible fields.
  static mpz_class common_radicand(const QuadraticNumber& x, const QuadraticNumber& y);
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  mpz_class d_{1};
};

/// Exact k-th root of a positive rational, when it is rational.
std::optional<mpq_class> exact_rational_root(const mpq_class& r, unsigned long k);

/// Writes n = s^2 * d with d carrying no square factor found by trial
/// division and not itself a perfect square (unless d == 1).
void split_square(const mpz_class& n, mpz_class& s, mpz_class& d);

}  // namespace qturan
