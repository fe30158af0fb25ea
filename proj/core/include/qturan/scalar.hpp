#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "qturan/bigfloat.hpp"
#include "qturan/quadratic.hpp"

namespace qturan {

enum class Field { Exact, Float };

/// Arithmetic field tag. Exact values live in Q(sqrt d); Float values are
/// MPFR numbers carrying `digits` significant decimal digits.
struct Mode {
  Field field = Field::Exact;
  unsigned digits = 0;

  static Mode exact() { return Mode{Field::Exact, 0}; }
  static Mode floating(unsigned digits);
  static Mode floating();

  bool is_exact() const { return field == Field::Exact; }
  std::string to_string() const;
  friend bool operator==(const Mode&, const Mode&) = default;
};

/// Default Float precision: $QTURAN_DIGITS when set to an integer >= 10,
/// otherwise 50.
unsigned default_digits();

/// A scalar in either field. Mixing fields in a binary operation raises
/// ModeMismatchError; conversion Exact -> Float is explicit via to_float().
class Scalar {
 public:
  Scalar() = default;
  Scalar(QuadraticNumber value) : value_(std::move(value)) {}  // NOLINT
  Scalar(BigFloat value, unsigned digits);

  static Scalar exact(long value) { return Scalar(QuadraticNumber(value)); }
  static Scalar exact(const mpq_class& value) { return Scalar(QuadraticNumber(value)); }
  static Scalar exact(long num, long den);
  static Scalar of(long value, const Mode& mode);
  static Scalar of(const mpq_class& value, const Mode& mode);
  /// Accepts "3", "-7/16", "0.125", "1e-40"; Exact mode keeps decimals as
  /// exact rationals.
  static Scalar parse(const std::string& text, const Mode& mode);

  Mode mode() const;
  bool is_exact() const { return std::holds_alternative<QuadraticNumber>(value_); }
  unsigned digits() const { return digits_; }

  const QuadraticNumber& exact_value() const;
  const BigFloat& float_value() const;

  /// True for Exact values with no irrational part.
  bool is_rational() const;
  mpq_class as_rational() const;
  /// Exact integer value, or a Float that is exactly integral.
  std::optional<long> as_integer() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// Same-mode constant.
  Scalar like(long value) const;
  Scalar like(const mpq_class& value) const;

  Scalar to_float(unsigned digits) const;
  /// Converts into `mode` (Exact -> Float or identity; Float -> Exact throws).
  Scalar in_mode(const Mode& mode) const;
  double to_double() const;
  std::string to_string() const;

  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  friend Scalar operator-(const Scalar& x);

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  void require_same_field(const Scalar& other, const char* op) const;

  std::variant<QuadraticNumber, BigFloat> value_;
  unsigned digits_ = 0;
};

Scalar abs(const Scalar& x);
Scalar min(const Scalar& x, const Scalar& y);
Scalar max(const Scalar& x, const Scalar& y);
/// Exact for rationals (result may be quadratic); Float otherwise.
Scalar sqrt(const Scalar& x);
/// Float only.
Scalar exp(const Scalar& x);
/// Float only.
Scalar log(const Scalar& x);
/// Float only.
Scalar sinh(const Scalar& x);
/// Float only.
Scalar cosh(const Scalar& x);
/// Float only: base^exponent for base > 0.
Scalar real_pow(const Scalar& base, const Scalar& exponent);

/// 10^(-digits) in the given mode; the default relative tolerance.
Scalar default_tolerance(const Mode& mode);

}  // namespace qturan
