#include "alcove/growth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "alcove/errors.hpp"
#include "alcove/moyprasad.hpp"

namespace alcove {

BallReport ball_sum(const RootDatum& datum, long r, const Limits& limits) {
  BallReport out;
  out.type = datum.type();
  out.radius = r;
  out.vertices = enumerate_scaled_alcove_vertices(datum, r, limits);
  out.vertex_count_chamber = out.vertices.size();
  out.per_type_counts = out.vertices.per_type_counts;
  out.gamma_poly = gamma_polynomial(datum);
  const auto& two_rho = datum.two_rho_coeffs();
  out.exponents.reserve(out.vertices.size());
  for (const auto& x : out.vertices.points) {
    const long e = quotient_exponents(datum, x);
    out.exponents.push_back(e);
    out.lower_poly.add_term(e, 1);
    Rational value = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) value += two_rho[i] * x[i];
    if (value > out.max_two_rho) out.max_two_rho = value;
  }
  out.upper_poly = out.gamma_poly * out.lower_poly;
  return out;
}

QPolynomial quotient_ball_sum(const RootDatum& datum, long r, long r_prime, const Limits& limits) {
  if (r_prime < 1) throw ValidationError(ValidationCode::kInvalidArgument, "level r' must be at least 1");
  QPolynomial out;
  for (const auto& x : enumerate_scaled_alcove_vertices(datum, r, limits).points) out.add_term(quotient_exponents(datum, x, r_prime), 1);
  return out;
}

QPolynomial gamma_polynomial(const RootDatum& datum) {
  QPolynomial out = QPolynomial::monomial(static_cast<long>(datum.num_positive_roots()), 1);
  for (int d : weyl_degrees(datum)) out *= QPolynomial::monomial(d, 1) - QPolynomial(1);
  return out;
}

Rational growth_exponent(const RootDatum& datum) {
  Rational best = 0;
  for (std::size_t i = 0; i < datum.highest_root_coeffs().size(); ++i) {
    const Rational ratio(datum.two_rho_coeffs()[i], datum.highest_root_coeffs()[i]);
    if (ratio > best) best = ratio;
  }
  best.canonicalize();
  return best;
}

Rational max_two_rho(const RootDatum& datum, long r, const Limits& limits) {
  const auto& two_rho = datum.two_rho_coeffs();
  Rational best = 0;
  for (const auto& x : enumerate_scaled_alcove_vertices(datum, r, limits).points) {
    Rational value = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) value += two_rho[i] * x[i];
    if (value > best) best = value;
  }
  return best;
}

const BoundsRow* BoundsTable::find(const std::string& type_name) const {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const BoundsRow& row) { return row.type.name() == type_name; });
  return it == rows.end() ? nullptr : &*it;
}

BoundsTable theorem_table(int max_classical_rank) {
  if (max_classical_rank < 2) throw ValidationError(ValidationCode::kInvalidArgument, "max classical rank must be at least 2");
  BoundsTable table;
  for (const auto& type : all_types_up_to_rank(max_classical_rank)) {
    const RootDatum datum = build_root_datum(type);
    BoundsRow row;
    row.type = type;
    row.growth_exponent = growth_exponent(datum);
    row.cdim_lower = to_long(ceil(row.growth_exponent));
    row.cdim_upper_depth_zero = static_cast<long>(datum.num_positive_roots());
    table.rows.push_back(row);
  }
  return table;
}

long parabolic_shift(const RootDatum& datum, const std::vector<int>& levi_simples) {
  std::vector<bool> in_levi(static_cast<std::size_t>(datum.rank()), false);
  for (int i : levi_simples) {
    if (i < 1 || i > datum.rank()) throw ValidationError(ValidationCode::kIndexOutOfRange, "simple root index " + std::to_string(i));
    in_levi[static_cast<std::size_t>(i - 1)] = true;
  }
  long count = 0;
  for (const auto& root : datum.positive_roots()) {
    for (std::size_t i = 0; i < root.coeffs.size(); ++i) {
      if (root.coeffs[i] != 0 && !in_levi[i]) {
        ++count;
        break;
      }
    }
  }
  return count;
}

SandwichBounds cind_sandwich(const RootDatum& datum, long R, long r, const Limits& limits) {
  if (R < 0 || r < 0) throw ValidationError(ValidationCode::kInvalidArgument, "depth R and level r must be nonnegative");
  SandwichBounds out;
  out.R = R;
  out.r = r;
  out.lower_divisor = datum.rank() + 1;
  out.lower_radius = r - R - 2;
  out.lower_empty = out.lower_radius < 0;
  if (!out.lower_empty) out.lower_poly = ball_sum(datum, out.lower_radius, limits).lower_poly;
  const auto& marks = datum.highest_root_coeffs();
  const long mark_sum = std::accumulate(marks.begin(), marks.end(), 0L);
  out.upper_radius = 2 + (r + 1) * mark_sum;
  out.upper_level = r + 1;
  out.upper_poly = gamma_polynomial(datum) * quotient_ball_sum(datum, out.upper_radius, out.upper_level, limits);
  out.upper_applies = R == 0;
  return out;
}

}  // namespace alcove
