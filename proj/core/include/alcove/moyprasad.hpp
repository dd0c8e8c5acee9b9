#pragma once

#include <optional>
#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/point.hpp"
#include "alcove/rational.hpp"

namespace alcove {

/// A function on Phi u {0}, stored as its value at 0 plus one value per root in
/// RootDatum::roots() order. Concavity is not enforced; see is_concave.
class ConcaveFunction {
 public:
  ConcaveFunction() = default;
  ConcaveFunction(Rational at_zero, std::vector<Rational> values);

  /// The constant function c on every root and at 0.
  static ConcaveFunction constant(const RootDatum& datum, const Rational& c);

  const Rational& at_zero() const { return at_zero_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t root_index) const { return values_[root_index]; }
  Rational& operator[](std::size_t root_index) { return values_[root_index]; }
  void set_at_zero(Rational v) { at_zero_ = std::move(v); }

  friend bool operator==(const ConcaveFunction&, const ConcaveFunction&) = default;

 private:
  Rational at_zero_ = 0;
  std::vector<Rational> values_;
};

/// q-exponent of the index [P_f : P_g], with the per-root terms.
struct IndexExponent {
  long exponent = 0;
  std::vector<long> per_root_contributions;  // RootDatum::roots() order
};

bool is_concave(const RootDatum& datum, const ConcaveFunction& f);

/// f_x(alpha) = -alpha(x), f_x(0) = 0.
ConcaveFunction point_function(const RootDatum& datum, const ApartmentPoint& x);

/// f(alpha) = max over x in the set of -alpha(x), f(0) = 0. Throws on an empty set.
ConcaveFunction omega_function(const RootDatum& datum, const std::vector<ApartmentPoint>& points);

/// f*(a) = f(a) + 1 when f(a) is an integer, ceil(f(a)) otherwise; the level at 0 follows the same rule.
ConcaveFunction optimize(const ConcaveFunction& f);

ConcaveFunction shift(const ConcaveFunction& f, const Rational& r);
ConcaveFunction pointwise_max(const ConcaveFunction& f, const ConcaveFunction& g);

/// Sum over all roots of ceil(g) - ceil(f). Requires concave f <= g with f(0) = g(0) > 0.
IndexExponent index_exponent(const RootDatum& datum, const ConcaveFunction& f, const ConcaveFunction& g);

/// Sum over positive roots of max(ceil(alpha(x)) - 1, 0), or with a level cap r':
/// max(min(ceil(alpha(x)), r') - 1, 0). x must lie in the closed chamber C+.
long quotient_exponents(const RootDatum& datum, const ApartmentPoint& x, std::optional<long> r_prime = std::nullopt);

/// f_x + r1 >= f_y + r2 on Phi u {0}, i.e. P_{x,r1} is contained in P_{y,r2}. Requires r1 > r2 >= 0.
bool filtration_contains(const RootDatum& datum, const ApartmentPoint& x, long r1, const ApartmentPoint& y, long r2);

}  // namespace alcove
