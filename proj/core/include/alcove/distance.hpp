#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "alcove/apartment.hpp"
#include "alcove/cartan.hpp"
#include "alcove/point.hpp"

namespace alcove {

/// Wall-separation distance between two vertices: d = 1 + the largest number of
/// mutually parallel walls strictly separating them (0 when they coincide).
struct DistanceReport {
  long d = 0;
  std::optional<Root> witness_root;  // lowest-index positive root attaining the maximum
  long wall_count = 0;               // d - 1, or 0 when d == 0
};

/// Number of integers strictly between alpha(x) and alpha(y). alpha must be a positive root.
long wall_count(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y, const Root& alpha);

DistanceReport wall_distance(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y);

bool adjacent(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y);

/// All vertices y of the apartment with d(center, y) <= r.
VertexSet apartment_ball(const RootDatum& datum, const ApartmentPoint& center, long r, const Limits& limits = {});

/// Graph distance in the adjacency graph of apartment vertices, by breadth-first search.
/// Throws ResourceError(kSearchBudget) when y is farther than `budget` steps.
long simplicial_distance(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y, long budget,
                         const Limits& limits = {});

/// Both metrics on every ordered pair of a vertex list, row-major.
struct PairwiseDistances {
  std::size_t size = 0;
  std::vector<std::int16_t> wall;
  std::vector<std::int16_t> simplicial;  // -1 where the distance exceeds the table radius

  long wall_at(std::size_t i, std::size_t j) const { return wall[i * size + j]; }
  std::optional<long> simplicial_at(std::size_t i, std::size_t j) const {
    const auto v = simplicial[i * size + j];
    return v < 0 ? std::nullopt : std::optional<long>(v);
  }
};

/// Simplicial distances for many pairs at once. Breadth-first balls of radius `max_radius` are
/// grown once around each alcove vertex v_i; a query (x, y) folds x onto some v_i with an affine
/// Weyl element w and looks up w(y). Both distances are invariant under the affine Weyl group.
class SimplicialDistanceTable {
 public:
  SimplicialDistanceTable(const RootDatum& datum, long max_radius, const Limits& limits = {});
  ~SimplicialDistanceTable();
  SimplicialDistanceTable(SimplicialDistanceTable&&) noexcept;
  SimplicialDistanceTable& operator=(SimplicialDistanceTable&&) noexcept;

  long max_radius() const;
  /// nullopt when the distance exceeds max_radius.
  std::optional<long> distance(const ApartmentPoint& x, const ApartmentPoint& y) const;
  PairwiseDistances pairwise(const std::vector<ApartmentPoint>& points) const;
  /// Number of vertices discovered around each v_i, for diagnostics.
  std::size_t explored_vertices() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace alcove
