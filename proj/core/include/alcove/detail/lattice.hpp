#pragma once

// Fixed-denominator integer kernels behind the public apartment and distance
// operations. Every vertex of the apartment lies in (1/N) Z^d with N the lcm of
// the marks, so vertex geometry runs on int64 numerators over N.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/point.hpp"

namespace alcove::detail {

using Scaled = std::vector<std::int64_t>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

/// Inclusive bounds on the scaled value of one positive root.
struct RootBound {
  std::size_t root;  // index into positive roots
  std::int64_t lo;
  std::int64_t hi;
};

/// An affine map p -> M p + b on scaled coordinates; elements of the affine Weyl group.
struct AffineMap {
  std::size_t dim = 0;
  std::vector<std::int64_t> linear;  // row-major dim x dim
  Scaled offset;

  static AffineMap identity(std::size_t dim);
  Scaled apply(const Scaled& p) const;
  void apply(const Scaled& p, Scaled& out) const;
};

struct FoldResult {
  Scaled point;
  AffineMap map;  // only filled when tracking was requested
  std::size_t steps = 0;
};

class Lattice {
 public:
  explicit Lattice(const RootDatum& datum);

  const RootDatum& datum() const { return *datum_; }
  std::size_t rank() const { return rank_; }
  std::int64_t denom() const { return denom_; }
  std::size_t num_positive() const { return num_positive_; }

  std::optional<Scaled> to_scaled(const ApartmentPoint& p) const;
  ApartmentPoint to_point(const Scaled& s) const;

  std::int64_t root_value(std::size_t positive_index, const Scaled& s) const;
  std::int64_t two_rho_value(const Scaled& s) const;
  std::int64_t highest_value(const Scaled& s) const;

  bool is_vertex(const Scaled& s) const;
  bool is_special(const Scaled& s) const;

  std::int64_t wall_count(std::size_t positive_index, const Scaled& x, const Scaled& y) const;
  /// (d, witness positive-root index); witness is empty when x == y.
  std::pair<std::int64_t, std::optional<std::size_t>> wall_distance(const Scaled& x, const Scaled& y) const;

  /// Folds into the closed fundamental alcove; throws ResourceError past step_limit.
  FoldResult fold(const Scaled& s, std::size_t step_limit, bool track_map) const;
  /// Index i with s == v_i, or -1.
  int alcove_vertex_index(const Scaled& s) const;
  Scaled alcove_vertex(int i) const;

  /// Enumerates vertices whose coordinates lie in [lo_i, hi_i] (scaled, inclusive) and whose
  /// root values satisfy every bound. Results are sorted and duplicate-free. `candidates` is
  /// incremented per lattice node visited; exceeding `budget` throws ResourceError.
  std::set<Scaled> enumerate(const Scaled& lo, const Scaled& hi, std::span<const RootBound> bounds, std::uint64_t budget,
                             std::uint64_t& candidates) const;

  /// Vertices y with no wall strictly separating x and y (x included).
  std::vector<Scaled> closed_star(const Scaled& x, std::uint64_t budget) const;

 private:
  const RootDatum* datum_;
  std::size_t rank_;
  std::size_t num_positive_;
  std::int64_t denom_;
  std::vector<int> coeffs_;  // positive roots, row-major num_positive x rank
  std::vector<std::int64_t> cartan_;
  std::vector<std::int64_t> marks_;
  std::vector<std::int64_t> theta_pairing_;
  std::vector<std::int64_t> two_rho_;
};

}  // namespace alcove::detail
