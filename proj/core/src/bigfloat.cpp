#include "qturan/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

// Re-precisions `target` in place without losing its value.
void widen(BigFloat& target, mpfr_prec_t bits) {
  if (target.precision() < bits) mpfr_prec_round(target.get(), bits, MPFR_RNDN);
}

}  // namespace

mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t bits) {
  BigFloat out(bits);
  if (text.empty()) throw DomainError("empty number");
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + text + "'");
  }
  return out;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  char* raw = nullptr;
  const std::string format = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_asprintf(&raw, format.c_str(), value_);
  std::unique_ptr<char, void (*)(char*)> owned(raw, [](char* p) { mpfr_free_str(p); });
  return std::string(owned.get());
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat operator-(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_neg(out.get(), x.get(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat out(wider(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

BigFloat sinh(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sinh(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat cosh(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_cosh(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat tanh(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_tanh(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace qturan
