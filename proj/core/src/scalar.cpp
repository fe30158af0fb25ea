#include "qturan/scalar.hpp"

#include <cctype>
#include <cstdlib>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

// Exact rational from a decimal literal with optional exponent.
mpq_class parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw DomainError("not a number: '" + text + "'");
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    const std::string tail = text.substr(pos + 1);
    char* end = nullptr;
    exponent = std::strtol(tail.c_str(), &end, 10);
    if (tail.empty() || *end != '\0') throw DomainError("bad exponent in '" + text + "'");
    pos = text.size();
  }
  if (pos != text.size()) throw DomainError("not a number: '" + text + "'");
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long net = exponent - scale;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  mpq_class out = net < 0 ? mpq_class(num, power) : mpq_class(num * power);
  out.canonicalize();
  return out;
}

mpq_class parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const mpq_class num = parse_decimal(text.substr(0, slash));
  const mpq_class den = parse_decimal(text.substr(slash + 1));
  if (sgn(den) == 0) throw DomainError("zero denominator in '" + text + "'");
  return num / den;
}

}  // namespace

Mode Mode::floating(unsigned digits) {
  if (digits < 10) throw DomainError("Float mode needs at least 10 digits");
  return Mode{Field::Float, digits};
}

Mode Mode::floating() { return floating(default_digits()); }

std::string Mode::to_string() const {
  return is_exact() ? "exact" : "float(" + std::to_string(digits) + ")";
}

unsigned default_digits() {
  if (const char* env = std::getenv("QTURAN_DIGITS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 10 && value <= 100000) {
      return static_cast<unsigned>(value);
    }
  }
  return 50;
}

Scalar::Scalar(BigFloat value, unsigned digits) : value_(std::move(value)), digits_(digits) {}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(QuadraticNumber(q));
}

Scalar Scalar::of(long value, const Mode& mode) {
  if (mode.is_exact()) return exact(value);
  return Scalar(BigFloat(value, bits_for_digits(mode.digits)), mode.digits);
}

Scalar Scalar::of(const mpq_class& value, const Mode& mode) {
  if (mode.is_exact()) return exact(value);
  return Scalar(BigFloat(value, bits_for_digits(mode.digits)), mode.digits);
}

Scalar Scalar::parse(const std::string& text, const Mode& mode) {
  if (mode.is_exact()) return exact(parse_rational(text));
  if (text.find('/') != std::string::npos) return of(parse_rational(text), mode);
  return Scalar(BigFloat::parse(text, bits_for_digits(mode.digits)), mode.digits);
}

Mode Scalar::mode() const { return is_exact() ? Mode::exact() : Mode{Field::Float, digits_}; }

const QuadraticNumber& Scalar::exact_value() const {
  if (!is_exact()) throw ModeMismatchError("expected an Exact scalar");
  return std::get<QuadraticNumber>(value_);
}

const BigFloat& Scalar::float_value() const {
  if (is_exact()) throw ModeMismatchError("expected a Float scalar");
  return std::get<BigFloat>(value_);
}

bool Scalar::is_rational() const { return is_exact() && exact_value().is_rational(); }

mpq_class Scalar::as_rational() const {
  if (!is_rational()) throw OffGridError("value " + to_string() + " is not rational");
  return exact_value().rational_part();
}

std::optional<long> Scalar::as_integer() const {
  if (is_exact()) {
    if (!is_rational()) return std::nullopt;
    const mpq_class& q = exact_value().rational_part();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
  }
  const BigFloat& f = float_value();
  if (!f.is_finite() || mpfr_integer_p(f.get()) == 0 || mpfr_fits_slong_p(f.get(), MPFR_RNDN) == 0) {
    return std::nullopt;
  }
  return mpfr_get_si(f.get(), MPFR_RNDN);
}

int Scalar::sign() const {
  if (is_exact()) return exact_value().sign();
  return float_value().sign();
}

Scalar Scalar::like(long value) const { return of(value, mode()); }
Scalar Scalar::like(const mpq_class& value) const { return of(value, mode()); }

Scalar Scalar::to_float(unsigned digits) const {
  const mpfr_prec_t bits = bits_for_digits(digits);
  if (is_exact()) return Scalar(exact_value().to_bigfloat(bits), digits);
  BigFloat copy(bits);
  mpfr_set(copy.get(), float_value().get(), MPFR_RNDN);
  return Scalar(std::move(copy), digits);
}

Scalar Scalar::in_mode(const Mode& mode) const {
  if (mode.is_exact()) {
    if (!is_exact()) throw ModeMismatchError("cannot convert a Float scalar to Exact");
    return *this;
  }
  if (!is_exact() && digits_ == mode.digits) return *this;
  return to_float(mode.digits);
}

double Scalar::to_double() const {
  if (is_exact()) return exact_value().to_bigfloat(64).to_double();
  return float_value().to_double();
}

std::string Scalar::to_string() const {
  if (is_exact()) return exact_value().to_string();
  return float_value().to_string(static_cast<int>(digits_));
}

Scalar Scalar::pow(long exponent) const {
  if (is_exact()) return Scalar(exact_value().pow(exponent));
  if (exponent < 0 && is_zero()) throw DomainError("negative power of zero");
  return Scalar(qturan::pow(float_value(), exponent), digits_);
}

void Scalar::require_same_field(const Scalar& other, const char* op) const {
  if (is_exact() != other.is_exact()) {
    throw ModeMismatchError(std::string("mixed Exact/Float operands in ") + op);
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs, "+");
  if (is_exact()) {
    std::get<QuadraticNumber>(value_) += rhs.exact_value();
  } else {
    std::get<BigFloat>(value_) += rhs.float_value();
    digits_ = std::max(digits_, rhs.digits_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs, "-");
  if (is_exact()) {
    std::get<QuadraticNumber>(value_) -= rhs.exact_value();
  } else {
    std::get<BigFloat>(value_) -= rhs.float_value();
    digits_ = std::max(digits_, rhs.digits_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs, "*");
  if (is_exact()) {
    std::get<QuadraticNumber>(value_) *= rhs.exact_value();
  } else {
    std::get<BigFloat>(value_) *= rhs.float_value();
    digits_ = std::max(digits_, rhs.digits_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs, "/");
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (is_exact()) {
    std::get<QuadraticNumber>(value_) /= rhs.exact_value();
  } else {
    std::get<BigFloat>(value_) /= rhs.float_value();
    digits_ = std::max(digits_, rhs.digits_);
  }
  return *this;
}

Scalar operator-(const Scalar& x) {
  if (x.is_exact()) return Scalar(-x.exact_value());
  return Scalar(-x.float_value(), x.digits_);
}

bool operator==(const Scalar& x, const Scalar& y) {
  x.require_same_field(y, "==");
  if (x.is_exact()) return x.exact_value() == y.exact_value();
  return x.float_value() == y.float_value();
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  x.require_same_field(y, "<=>");
  if (x.is_exact()) return x.exact_value() <=> y.exact_value();
  const auto c = x.float_value() <=> y.float_value();
  if (c == std::partial_ordering::unordered) throw DomainError("comparison with NaN");
  if (c == std::partial_ordering::less) return std::strong_ordering::less;
  if (c == std::partial_ordering::greater) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }
Scalar min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
Scalar max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

Scalar sqrt(const Scalar& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative value");
  if (x.is_exact()) return Scalar(QuadraticNumber::sqrt_of(x.as_rational()));
  return Scalar(sqrt(x.float_value()), x.digits());
}

Scalar exp(const Scalar& x) {
  return Scalar(exp(x.float_value()), x.digits());
}

Scalar sinh(const Scalar& x) { return Scalar(sinh(x.float_value()), x.digits()); }

Scalar cosh(const Scalar& x) { return Scalar(cosh(x.float_value()), x.digits()); }

Scalar log(const Scalar& x) {
  if (x.sign() <= 0) throw DomainError("log of a nonpositive value");
  return Scalar(log(x.float_value()), x.digits());
}

Scalar real_pow(const Scalar& base, const Scalar& exponent) {
  if (base.sign() < 0) throw DomainError("real power of a negative base");
  const unsigned digits = std::max(base.digits(), exponent.is_exact() ? 0U : exponent.digits());
  const Scalar e = exponent.in_mode(base.mode());
  if (base.is_zero()) {
    if (e.sign() > 0) return base.like(0);
    if (e.is_zero()) return base.like(1);
    throw DomainError("negative power of zero");
  }
  return Scalar(pow(base.float_value(), e.float_value()), digits);
}

Scalar default_tolerance(const Mode& mode) {
  if (mode.is_exact()) return Scalar::exact(0);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, mode.digits);
  return Scalar::of(mpq_class(mpz_class(1), power), mode);
}

}  // namespace qturan
