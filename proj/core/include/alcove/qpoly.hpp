#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

/// Sparse polynomial in a formal variable q with big-integer coefficients.
/// Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  /// The constant polynomial c.
  QPolynomial(long c);  // NOLINT(google-explicit-constructor)
  static QPolynomial monomial(long exponent, const Integer& coeff);
  static QPolynomial q() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  /// nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<long> degree() const;
  Integer leading_coefficient() const;
  Integer coefficient(long exponent) const;
  const std::map<long, Integer>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Sum of coefficients, the value at q = 1.
  Integer coefficient_sum() const;

  Integer evaluate(const Integer& q0) const;
  Rational evaluate(const Rational& q0) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  /// Adds coeff * q^exponent.
  void add_term(long exponent, const Integer& coeff);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "2q^2 + q + 3"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Ascending (exponent, decimal coefficient) pairs.
  std::vector<std::pair<long, std::string>> serialize() const;

 private:
  std::map<long, Integer> terms_;
};

}  // namespace alcove
