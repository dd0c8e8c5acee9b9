#pragma once

#include <cstddef>
#include <vector>

#include "alcove/apartment.hpp"
#include "alcove/cartan.hpp"
#include "alcove/qpoly.hpp"
#include "alcove/rational.hpp"

namespace alcove {

/// Cardinality data for the ball B(o, r). The true |B(o, r)| lies between
/// lower_poly(q) and upper_poly(q) = gamma_poly(q) * lower_poly(q).
struct BallReport {
  RootSystemType type{Family::A, 1};
  long radius = 0;
  std::size_t vertex_count_chamber = 0;  // |(rC)_0|
  QPolynomial lower_poly;                // S(r)
  QPolynomial upper_poly;
  QPolynomial gamma_poly;
  Rational max_two_rho = 0;  // D(r)
  std::vector<std::size_t> per_type_counts;
  VertexSet vertices;
  std::vector<long> exponents;  // per vertex, parallel to vertices.points
};

BallReport ball_sum(const RootDatum& datum, long r, const Limits& limits = {});

/// Sum over (rC)_0 of q^(capped exponent), the lower bound for |P_{o,r'} \ B(o, r)|.
QPolynomial quotient_ball_sum(const RootDatum& datum, long r, long r_prime, const Limits& limits = {});

/// q^|Phi+| * prod_i (q^{d_i} - 1), the order of the reductive quotient at a hyperspecial vertex.
QPolynomial gamma_polynomial(const RootDatum& datum);

/// D = max_i c'_i / c_i.
Rational growth_exponent(const RootDatum& datum);

/// Exact max of 2 rho over (rC)_0.
Rational max_two_rho(const RootDatum& datum, long r, const Limits& limits = {});

struct BoundsRow {
  RootSystemType type{Family::A, 1};
  Rational growth_exponent = 0;
  long cdim_lower = 0;             // ceil(D): canonical dimensions are integers
  long cdim_upper_depth_zero = 0;  // |Phi+|
};

struct BoundsTable {
  std::vector<BoundsRow> rows;
  const BoundsRow* find(const std::string& type_name) const;
};

/// Classical families up to the given rank, then E6, E7, E8, F4, G2.
BoundsTable theorem_table(int max_classical_rank);

/// Number of positive roots whose support is not inside the given simple roots (1-based);
/// the shift of canonical dimension under parabolic induction from that Levi.
long parabolic_shift(const RootDatum& datum, const std::vector<int>& levi_simples);

/// Radii and polynomials bracketing |B(x, r; K, sigma)| for compact induction from K with
/// sigma trivial on P_{x,R}.
struct SandwichBounds {
  long R = 0;
  long r = 0;
  bool lower_empty = false;  // r < R + 2
  long lower_radius = 0;     // r - R - 2
  long lower_divisor = 1;    // d + 1
  QPolynomial lower_poly;    // S(lower_radius)
  long upper_radius = 0;     // 2 + (r + 1) sum c_i
  long upper_level = 0;      // r + 1
  QPolynomial upper_poly;    // gamma * quotient sum at (upper_radius, upper_level)
  bool upper_depth_zero_only = true;
  bool upper_applies = false;  // R == 0, i.e. K = P_x with an inflated cuspidal representation
};

SandwichBounds cind_sandwich(const RootDatum& datum, long R, long r, const Limits& limits = {});

}  // namespace alcove
