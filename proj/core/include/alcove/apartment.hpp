#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/point.hpp"
#include "alcove/rational.hpp"

namespace alcove {

/// Caps that turn runaway computations into typed ResourceErrors.
struct Limits {
  std::uint64_t candidate_budget = 100'000'000;
  std::size_t fold_step_limit = 1'000'000;
};

/// The affine function x -> alpha(x) + offset; its zero set is a wall.
struct AffineRoot {
  Root root;
  long offset = 0;
};

/// Deterministically ordered vertices with their types.
struct VertexSet {
  std::vector<ApartmentPoint> points;
  std::vector<int> types;                  // parallel to points
  std::vector<std::size_t> per_type_counts;  // length rank + 1

  std::size_t size() const { return points.size(); }
  bool contains(const ApartmentPoint& p) const;
};

/// v_0 = o and v_i = omega_i / c_i.
ApartmentPoint alcove_vertex(const RootDatum& datum, int i);
/// omega_i, with alpha_j(omega_i) = delta_ij; i is 1-based.
ApartmentPoint fundamental_coweight(const RootDatum& datum, int i);

Rational eval_affine(const RootDatum& datum, const AffineRoot& a, const ApartmentPoint& x);

/// t_i >= 0 for all i and alpha_0(x) <= r.
bool in_scaled_alcove(const RootDatum& datum, const Rational& r, const ApartmentPoint& x);

/// The integral roots at x span the dual space.
bool is_vertex(const RootDatum& datum, const ApartmentPoint& x);
/// Every root is integral at x.
bool is_special(const RootDatum& datum, const ApartmentPoint& x);

/// The point of the closed fundamental alcove in the affine Weyl orbit of x. Reflects in the
/// lowest-index violated wall first (index 0 is alpha_0 = 1, index i is alpha_i = 0).
ApartmentPoint fold_to_alcove(const RootDatum& datum, const ApartmentPoint& x, const Limits& limits = {});

/// Type in {0, ..., d}. Throws ValidationError(kNotAVertex).
int vertex_type(const RootDatum& datum, const ApartmentPoint& x, const Limits& limits = {});

/// Vertices of r C, i.e. the vertices of the chamber ball B(o, r) intersected with C+.
VertexSet enumerate_scaled_alcove_vertices(const RootDatum& datum, long r, const Limits& limits = {});

/// Vertices with lo_i <= t_i <= hi_i.
VertexSet enumerate_box_vertices(const RootDatum& datum, const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                 const Limits& limits = {});

}  // namespace alcove
