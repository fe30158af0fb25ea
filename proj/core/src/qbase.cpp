#include "qturan/qbase.hpp"

#include <sstream>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

void require_unit_interval(const Scalar& value, const char* name) {
  if (value.sign() <= 0 || value >= value.like(1)) {
    throw DomainError(std::string(name) + " must lie in (0,1), got " + value.to_string());
  }
}

}  // namespace

QBase QBase::from_q(const Scalar& q) {
  require_unit_interval(q, "q");
  if (q.is_exact() && !q.is_rational()) throw DomainError("exact q must be rational");
  return QBase(sqrt(q), q);
}

QBase QBase::from_p(const Scalar& p) {
  require_unit_interval(p, "p");
  Scalar q = p * p;
  if (q.is_exact() && !q.is_rational()) throw DomainError("exact p must have a rational square");
  return QBase(p, std::move(q));
}

Scalar QBase::pow(const Scalar& exponent) const {
  if (!is_exact()) {
    const Scalar u = exponent.in_mode(mode());
    if (const auto n = u.as_integer()) return q_.pow(*n);
    return exp(u * log(q_));
  }
  if (!exponent.is_exact()) throw ModeMismatchError("Float exponent for an Exact base");
  const mpq_class u = exponent.as_rational();
  const mpz_class& den = u.get_den();
  if (!u.get_num().fits_slong_p() || !den.fits_ulong_p()) throw OffGridError("q-exponent too large");
  const long num = u.get_num().get_si();
  if (den == 1) return q_.pow(num);
  if (den == 2) return p_.pow(num);
  const unsigned long k = den.get_ui();
  const mpq_class q = q_.as_rational();
  if (const auto root = exact_rational_root(q, k)) return Scalar::exact(*root).pow(num);
  if (k % 2 == 0) {
    if (const auto half = exact_rational_root(q, k / 2)) {
      return Scalar(QuadraticNumber::sqrt_of(*half)).pow(num);
    }
  }
  throw OffGridError("q^(" + u.get_str() + ") is not representable exactly for q = " + q.get_str());
}

ParamVector::ParamVector(std::vector<Scalar> entries, bool nonneg_required)
    : entries_(std::move(entries)), nonneg_required_(nonneg_required) {
  if (nonneg_required_) {
    for (const Scalar& e : entries_) {
      if (e.sign() < 0) throw DomainError("parameter " + e.to_string() + " must be nonnegative");
    }
  }
}

ParamVector ParamVector::shifted(const Scalar& mu) const {
  std::vector<Scalar> out;
  out.reserve(entries_.size());
  for (const Scalar& e : entries_) out.push_back(e + mu);
  return ParamVector(std::move(out), nonneg_required_ && mu.sign() >= 0);
}

ParamVector ParamVector::parse(const std::string& text, const Mode& mode, bool nonneg_required) {
  std::vector<Scalar> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in parameter list '" + text + "'");
    out.push_back(Scalar::parse(item, mode));
  }
  return ParamVector(std::move(out), nonneg_required);
}

}  // namespace qturan
