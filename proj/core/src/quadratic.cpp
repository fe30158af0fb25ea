#include "qturan/quadratic.hpp"

#include "qturan/errors.hpp"

namespace qturan {

void split_square(const mpz_class& n, mpz_class& s, mpz_class& d) {
  if (sgn(n) <= 0) throw DomainError("split_square needs a positive integer");
  s = 1;
  d = n;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    const unsigned long p2 = p * p;
    if (d < p2) break;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p2)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p2);
      s *= p;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    s *= root;
    d = 1;
  }
}

std::optional<mpq_class> exact_rational_root(const mpq_class& r, unsigned long k) {
  if (sgn(r) <= 0) throw DomainError("exact_rational_root needs a positive rational");
  if (k == 0) throw DomainError("zeroth root");
  mpz_class num_root;
  mpz_class den_root;
  const bool num_exact = mpz_root(num_root.get_mpz_t(), r.get_num_mpz_t(), k) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), r.get_den_mpz_t(), k) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  mpq_class out(num_root, den_root);
  out.canonicalize();
  return out;
}

QuadraticNumber::QuadraticNumber(mpq_class a, mpq_class b, mpz_class radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(d_) <= 0) throw DomainError("radicand must be positive");
  mpz_class s;
  mpz_class d;
  split_square(d_, s, d);
  b_ *= s;
  d_ = d;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  normalize();
}

QuadraticNumber QuadraticNumber::sqrt_of(const mpq_class& r) {
  if (sgn(r) < 0) throw DomainError("square root of a negative rational");
  if (sgn(r) == 0) return QuadraticNumber();
  // sqrt(n/m) = sqrt(n*m)/m
  const mpz_class nm = r.get_num() * r.get_den();
  mpz_class s;
  mpz_class d;
  split_square(nm, s, d);
  mpq_class coeff(s, r.get_den());
  coeff.canonicalize();
  if (d == 1) return QuadraticNumber(coeff);
  return QuadraticNumber(mpq_class(0), coeff, d);
}

void QuadraticNumber::normalize() {
  if (sgn(b_) == 0) d_ = 1;
}

mpz_class QuadraticNumber::common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational()) return x.d_;
  if (x.d_ != y.d_) {
    throw ModeMismatchError("cannot combine sqrt(" + x.d_.get_str() + ") and sqrt(" +
                            y.d_.get_str() + ") values");
  }
  return x.d_;
}

int QuadraticNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d; equality is impossible because
  // d is not a perfect square.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * d_;
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  d_ = common_radicand(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  d_ = common_radicand(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  if (rhs.is_rational()) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
    d_ = rhs.d_;
    normalize();
    return *this;
  }
  d_ = common_radicand(*this, rhs);
  mpq_class a = a_ * rhs.a_ + b_ * rhs.b_ * d_;
  mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (rhs.is_rational()) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    normalize();
    return *this;
  }
  const mpq_class norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * rhs.d_;
  *this *= rhs.conjugate();
  a_ /= norm;
  b_ /= norm;
  normalize();
  return *this;
}

QuadraticNumber operator-(const QuadraticNumber& x) {
  QuadraticNumber out = x;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
  return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber out = *this;
  out.b_ = -out.b_;
  return out;
}

QuadraticNumber QuadraticNumber::pow(long exponent) const {
  if (exponent < 0) return QuadraticNumber(1) / pow(-exponent);
  QuadraticNumber result(1);
  QuadraticNumber base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

BigFloat QuadraticNumber::to_bigfloat(mpfr_prec_t bits) const {
  BigFloat out(a_, bits);
  if (!is_rational()) out += BigFloat(b_, bits) * sqrt(BigFloat(d_, bits));
  return out;
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return out + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
}

}  // namespace qturan
