#include "alcove/moyprasad.hpp"

#include <string>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

Rational optimize_value(const Rational& v) { return is_integer(v) ? Rational(v + 1) : Rational(ceil(v)); }

void check_shape(const RootDatum& datum, const ConcaveFunction& f) {
  if (f.values().size() != datum.roots().size()) {
    throw ValidationError(ValidationCode::kDimensionMismatch, "function is not defined on every root");
  }
}

void check_chamber(const ApartmentPoint& x) {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] < 0) throw ValidationError(ValidationCode::kOutsideChamber, x.to_string() + " is outside the fundamental chamber");
  }
}

}  // namespace

ConcaveFunction::ConcaveFunction(Rational at_zero, std::vector<Rational> values)
    : at_zero_(std::move(at_zero)), values_(std::move(values)) {}

ConcaveFunction ConcaveFunction::constant(const RootDatum& datum, const Rational& c) {
  return ConcaveFunction(c, std::vector<Rational>(datum.roots().size(), c));
}

bool is_concave(const RootDatum& datum, const ConcaveFunction& f) {
  check_shape(datum, f);
  if (f.at_zero() < 0) return false;
  const auto roots = datum.roots();
  const std::size_t npos = datum.num_positive_roots();
  for (std::size_t a = 0; a < npos; ++a) {
    if (f[a] + f[a + npos] < f.at_zero()) return false;
  }
  std::vector<int> sum(static_cast<std::size_t>(datum.rank()));
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = roots[a].coeffs[i] + roots[b].coeffs[i];
      const auto c = datum.root_index(sum);
      if (c && f[a] + f[b] < f[*c]) return false;
    }
  }
  return true;
}

ConcaveFunction point_function(const RootDatum& datum, const ApartmentPoint& x) {
  std::vector<Rational> values;
  values.reserve(datum.roots().size());
  for (const auto& root : datum.roots()) values.push_back(-eval_root(datum, root, x));
  return ConcaveFunction(0, std::move(values));
}

ConcaveFunction omega_function(const RootDatum& datum, const std::vector<ApartmentPoint>& points) {
  if (points.empty()) throw ValidationError(ValidationCode::kEmptyInput, "omega_function needs at least one point");
  ConcaveFunction f = point_function(datum, points.front());
  for (std::size_t p = 1; p < points.size(); ++p) f = pointwise_max(f, point_function(datum, points[p]));
  return f;
}

ConcaveFunction optimize(const ConcaveFunction& f) {
  std::vector<Rational> values;
  values.reserve(f.values().size());
  for (const auto& v : f.values()) values.push_back(optimize_value(v));
  return ConcaveFunction(optimize_value(f.at_zero()), std::move(values));
}

ConcaveFunction shift(const ConcaveFunction& f, const Rational& r) {
  std::vector<Rational> values;
  values.reserve(f.values().size());
  for (const auto& v : f.values()) values.push_back(v + r);
  return ConcaveFunction(f.at_zero() + r, std::move(values));
}

ConcaveFunction pointwise_max(const ConcaveFunction& f, const ConcaveFunction& g) {
  if (f.values().size() != g.values().size()) {
    throw ValidationError(ValidationCode::kDimensionMismatch, "functions live on different root systems");
  }
  std::vector<Rational> values;
  values.reserve(f.values().size());
  for (std::size_t k = 0; k < f.values().size(); ++k) values.push_back(f[k] < g[k] ? g[k] : f[k]);
  return ConcaveFunction(f.at_zero() < g.at_zero() ? g.at_zero() : f.at_zero(), std::move(values));
}

IndexExponent index_exponent(const RootDatum& datum, const ConcaveFunction& f, const ConcaveFunction& g) {
  check_shape(datum, f);
  check_shape(datum, g);
  if (!is_concave(datum, f) || !is_concave(datum, g)) {
    throw ValidationError(ValidationCode::kNotConcave, "index_exponent needs concave functions");
  }
  if (f.at_zero() != g.at_zero() || f.at_zero() <= 0) {
    throw ValidationError(ValidationCode::kLevelMismatch, "index_exponent needs f(0) = g(0) > 0");
  }
  IndexExponent out;
  out.per_root_contributions.reserve(f.values().size());
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    if (g[k] < f[k]) {
      throw ValidationError(ValidationCode::kNotDominating, "g < f at root " + datum.roots()[k].to_string());
    }
    const long term = to_long(ceil(g[k]) - ceil(f[k]));
    out.per_root_contributions.push_back(term);
    out.exponent += term;
  }
  return out;
}

long quotient_exponents(const RootDatum& datum, const ApartmentPoint& x, std::optional<long> r_prime) {
  if (x.dim() != static_cast<std::size_t>(datum.rank())) {
    throw ValidationError(ValidationCode::kDimensionMismatch, "point dimension does not match the rank");
  }
  check_chamber(x);
  if (r_prime && *r_prime < 1) throw ValidationError(ValidationCode::kInvalidArgument, "level cap must be positive");
  long total = 0;
  for (const auto& root : datum.positive_roots()) {
    Integer c = ceil(eval_root(datum, root, x));
    if (r_prime && c > *r_prime) c = *r_prime;
    if (c > 1) total += to_long(c - 1);
  }
  return total;
}

bool filtration_contains(const RootDatum& datum, const ApartmentPoint& x, long r1, const ApartmentPoint& y, long r2) {
  if (!(r1 > r2 && r2 >= 0)) throw ValidationError(ValidationCode::kInvalidArgument, "filtration levels need r1 > r2 >= 0");
  const ConcaveFunction fx = shift(point_function(datum, x), r1);
  const ConcaveFunction fy = shift(point_function(datum, y), r2);
  if (fx.at_zero() < fy.at_zero()) return false;
  for (std::size_t k = 0; k < fx.values().size(); ++k) {
    if (fx[k] < fy[k]) return false;
  }
  return true;
}

}  // namespace alcove
