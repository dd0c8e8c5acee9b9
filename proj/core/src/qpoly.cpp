#include "alcove/qpoly.hpp"

#include "alcove/errors.hpp"

namespace alcove {

QPolynomial::QPolynomial(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

QPolynomial QPolynomial::monomial(long exponent, const Integer& coeff) {
  QPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void QPolynomial::add_term(long exponent, const Integer& coeff) {
  if (exponent < 0) throw ValidationError(ValidationCode::kInvalidArgument, "negative exponent " + std::to_string(exponent));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<long> QPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Integer QPolynomial::leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

Integer QPolynomial::coefficient(long exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer QPolynomial::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Integer QPolynomial::evaluate(const Integer& q0) const {
  // Horner over the sparse exponents, highest first.
  Integer acc = 0;
  long prev = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(prev - it->first));
    acc = acc * power + it->second;
    prev = it->first;
  }
  Integer tail;
  mpz_pow_ui(tail.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(prev));
  return acc * tail;
}

Rational QPolynomial::evaluate(const Rational& q0) const {
  Rational acc = 0;
  Rational power = 1;
  long at = 0;
  for (const auto& [e, c] : terms_) {
    for (; at < e; ++at) power *= q0;
    acc += power * c;
  }
  acc.canonicalize();
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) { return *this = *this * other; }

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Integer c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str();
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<std::pair<long, std::string>> QPolynomial::serialize() const {
  std::vector<std::pair<long, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.get_str());
  return out;
}

}  // namespace alcove
