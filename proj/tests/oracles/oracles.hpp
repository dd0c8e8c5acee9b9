#pragma once

// Slow, direct reference implementations used only by the tests. They share no code
// with the library beyond GMP: Cartan matrices are typed in by hand, roots come from
// reflection orbits, and vertices from brute force on a fine lattice.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Coords = std::vector<Q>;
using IntVec = std::vector<int>;

struct System {
  std::string name;
  int rank = 0;
  std::vector<IntVec> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<IntVec> positive;
  IntVec highest;
  IntVec two_rho;
  int lcm = 1;
  std::vector<Q> lengths;  // (alpha_i, alpha_i) up to a common scale
};

std::vector<IntVec> bourbaki_cartan(char family, int rank);
/// Positive roots from closing the simple roots under the simple reflections.
std::vector<IntVec> reflection_closure(const std::vector<IntVec>& cartan);
System make_system(char family, int rank);
System make_system(const std::string& name);

Q eval(const IntVec& root, const Coords& t);
/// Integral roots at t span rank d, by Gaussian elimination over Q.
bool is_vertex(const System& s, const Coords& t);
/// Every point of (1/lcm)Z^d in the box that is a vertex.
std::vector<Coords> box_vertices(const System& s, const Coords& lo, const Coords& hi);
long wall_distance(const System& s, const Coords& x, const Coords& y);
/// Distinct and no wall alpha = k strictly separates them.
bool adjacent(const System& s, const Coords& x, const Coords& y);
/// All-pairs graph distance inside the given vertex list (-1 = unreachable).
std::vector<std::vector<int>> graph_distances(const System& s, const std::vector<Coords>& vertices);
bool in_scaled_alcove(const System& s, const Coords& t, long r);
/// Sum over positive roots of max(ceil(alpha(x)) - 1, 0), optionally with level cap.
long quotient_exponent(const System& s, const Coords& t, long cap = -1);
Q two_rho_at(const System& s, const Coords& t);
/// Coefficients exponent -> count of vertices of rC weighted q^exponent.
std::map<long, long> ball_polynomial(const System& s, long r, long cap = -1);
/// Number of positive roots of the Levi spanned by the chosen simple roots (0-based).
long levi_positive_count(const System& s, const std::vector<int>& simples);
/// <alpha, beta^vee> from root lengths propagated along the Dynkin diagram.
Q coroot_pairing(const System& s, const IntVec& alpha, const IntVec& beta);
/// Reflection of t in the wall alpha = k.
Coords reflect(const System& s, const Coords& t, const IntVec& alpha, long k);
/// Size of the Weyl group orbit of rho, i.e. |W|.
long weyl_order(const System& s);
Q parse_q(const std::string& text);
std::string str(const Coords& t);

}  // namespace oracle
