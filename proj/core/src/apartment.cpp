#include "alcove/apartment.hpp"

#include <algorithm>
#include <string>

#include "alcove/detail/lattice.hpp"
#include "alcove/detail/vertex_set.hpp"
#include "alcove/errors.hpp"

namespace alcove {

namespace detail {

VertexSet make_vertex_set(const Lattice& lattice, const std::set<Scaled>& points, std::size_t fold_step_limit) {
  VertexSet out;
  out.per_type_counts.assign(lattice.rank() + 1, 0);
  out.points.reserve(points.size());
  out.types.reserve(points.size());
  for (const auto& s : points) {
    const int type = lattice.alcove_vertex_index(lattice.fold(s, fold_step_limit, false).point);
    out.points.push_back(lattice.to_point(s));
    out.types.push_back(type);
    ++out.per_type_counts[static_cast<std::size_t>(type)];
  }
  return out;
}

std::int64_t scaled_floor(const Rational& value, std::int64_t denom) {
  const Integer v = floor(value * Rational(static_cast<long>(denom)));
  if (!v.fits_slong_p()) throw ValidationError(ValidationCode::kInvalidArgument, "coordinate bound out of range");
  return v.get_si();
}

std::int64_t scaled_ceil(const Rational& value, std::int64_t denom) {
  const Integer v = ceil(value * Rational(static_cast<long>(denom)));
  if (!v.fits_slong_p()) throw ValidationError(ValidationCode::kInvalidArgument, "coordinate bound out of range");
  return v.get_si();
}

}  // namespace detail

namespace {

void check_dim(const RootDatum& datum, const ApartmentPoint& x) {
  if (x.dim() != static_cast<std::size_t>(datum.rank())) {
    throw ValidationError(ValidationCode::kDimensionMismatch, "expected " + std::to_string(datum.rank()) +
                                                                  " coordinates, got " + std::to_string(x.dim()));
  }
}

}  // namespace

bool VertexSet::contains(const ApartmentPoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

ApartmentPoint alcove_vertex(const RootDatum& datum, int i) {
  if (i < 0 || i > datum.rank()) throw ValidationError(ValidationCode::kIndexOutOfRange, "alcove vertex index " + std::to_string(i));
  std::vector<Rational> t(static_cast<std::size_t>(datum.rank()), Rational(0));
  if (i > 0) t[static_cast<std::size_t>(i - 1)] = Rational(1, datum.highest_root_coeffs()[static_cast<std::size_t>(i - 1)]);
  return ApartmentPoint(std::move(t));
}

ApartmentPoint fundamental_coweight(const RootDatum& datum, int i) {
  if (i < 1 || i > datum.rank()) throw ValidationError(ValidationCode::kIndexOutOfRange, "coweight index " + std::to_string(i));
  std::vector<Rational> t(static_cast<std::size_t>(datum.rank()), Rational(0));
  t[static_cast<std::size_t>(i - 1)] = 1;
  return ApartmentPoint(std::move(t));
}

Rational eval_affine(const RootDatum& datum, const AffineRoot& a, const ApartmentPoint& x) {
  return eval_root(datum, a.root, x) + a.offset;
}

bool in_scaled_alcove(const RootDatum& datum, const Rational& r, const ApartmentPoint& x) {
  check_dim(datum, x);
  Rational top = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] < 0) return false;
    top += datum.highest_root_coeffs()[i] * x[i];
  }
  return top <= r;
}

bool is_vertex(const RootDatum& datum, const ApartmentPoint& x) {
  check_dim(datum, x);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& root : datum.positive_roots()) {
    if (is_integer(eval_root(datum, root, x))) rows.emplace_back(root.coeffs.begin(), root.coeffs.end());
  }
  if (rows.size() < x.dim()) return false;
  return detail::integer_rank(std::move(rows)) == datum.rank();
}

bool is_special(const RootDatum& datum, const ApartmentPoint& x) {
  check_dim(datum, x);
  return std::all_of(datum.positive_roots().begin(), datum.positive_roots().end(),
                     [&](const Root& root) { return is_integer(eval_root(datum, root, x)); });
}

ApartmentPoint fold_to_alcove(const RootDatum& datum, const ApartmentPoint& x, const Limits& limits) {
  check_dim(datum, x);
  const auto n = x.dim();
  std::vector<Rational> t = x.coords();
  const auto& marks = datum.highest_root_coeffs();
  const auto& theta = datum.highest_coroot_pairing();
  for (std::size_t steps = 0;; ++steps) {
    Rational excess = -1;
    for (std::size_t i = 0; i < n; ++i) excess += marks[i] * t[i];
    int wall = -1;
    if (excess > 0) {
      wall = 0;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i] < 0) {
          wall = static_cast<int>(i) + 1;
          break;
        }
      }
    }
    if (wall < 0) break;
    if (steps >= limits.fold_step_limit) {
      throw ResourceError(ResourceCode::kFoldSteps, "fold exceeded " + std::to_string(limits.fold_step_limit) + " reflections");
    }
    if (wall == 0) {
      for (std::size_t j = 0; j < n; ++j) t[j] -= excess * theta[j];
    } else {
      const auto i = static_cast<std::size_t>(wall - 1);
      const Rational ti = t[i];
      for (std::size_t j = 0; j < n; ++j) t[j] -= ti * datum.cartan(static_cast<int>(j), static_cast<int>(i));
    }
  }
  return ApartmentPoint(std::move(t));
}

int vertex_type(const RootDatum& datum, const ApartmentPoint& x, const Limits& limits) {
  if (!is_vertex(datum, x)) throw ValidationError(ValidationCode::kNotAVertex, x.to_string() + " is not a vertex");
  const ApartmentPoint folded = fold_to_alcove(datum, x, limits);
  for (int i = 0; i <= datum.rank(); ++i) {
    if (folded == alcove_vertex(datum, i)) return i;
  }
  // unreachable for a vertex: the closed alcove's only vertices are v_0..v_d
  throw ValidationError(ValidationCode::kNotAVertex, x.to_string() + " folds to non-vertex " + folded.to_string());
}

VertexSet enumerate_scaled_alcove_vertices(const RootDatum& datum, long r, const Limits& limits) {
  if (r < 0) throw ValidationError(ValidationCode::kInvalidArgument, "radius must be nonnegative");
  const detail::Lattice lattice(datum);
  const auto n = lattice.rank();
  const std::int64_t N = lattice.denom();
  detail::Scaled lo(n, 0), hi(n);
  for (std::size_t i = 0; i < n; ++i) hi[i] = detail::floor_div(r * N, datum.highest_root_coeffs()[i]);
  const std::vector<detail::RootBound> bounds{{datum.num_positive_roots() - 1, 0, r * N}};
  std::uint64_t candidates = 0;
  const auto found = lattice.enumerate(lo, hi, bounds, limits.candidate_budget, candidates);
  return detail::make_vertex_set(lattice, found, limits.fold_step_limit);
}

VertexSet enumerate_box_vertices(const RootDatum& datum, const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                 const Limits& limits) {
  const auto n = static_cast<std::size_t>(datum.rank());
  if (lo.size() != n || hi.size() != n) throw ValidationError(ValidationCode::kDimensionMismatch, "box dimension mismatch");
  const detail::Lattice lattice(datum);
  detail::Scaled slo(n), shi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) throw ValidationError(ValidationCode::kInvalidArgument, "box lower bound exceeds upper bound");
    slo[i] = detail::scaled_ceil(lo[i], lattice.denom());
    shi[i] = detail::scaled_floor(hi[i], lattice.denom());
  }
  std::uint64_t candidates = 0;
  const auto found = lattice.enumerate(slo, shi, {}, limits.candidate_budget, candidates);
  return detail::make_vertex_set(lattice, found, limits.fold_step_limit);
}

}  // namespace alcove
