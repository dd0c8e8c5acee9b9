#include "alcove/distance.hpp"

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "alcove/detail/lattice.hpp"
#include "alcove/detail/vertex_set.hpp"
#include "alcove/errors.hpp"

namespace alcove {

namespace {

using detail::Scaled;

struct ScaledHash {
  std::size_t operator()(const Scaled& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : s) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

Scaled require_vertex(const detail::Lattice& lattice, const ApartmentPoint& x) {
  if (x.dim() != lattice.rank()) {
    throw ValidationError(ValidationCode::kDimensionMismatch, "expected " + std::to_string(lattice.rank()) + " coordinates");
  }
  auto s = lattice.to_scaled(x);
  if (!s || !lattice.is_vertex(*s)) throw ValidationError(ValidationCode::kNotAVertex, x.to_string() + " is not a vertex");
  return *s;
}

// Memoized closed stars; neighbors exclude the vertex itself.
class NeighborCache {
 public:
  NeighborCache(const detail::Lattice& lattice, std::uint64_t budget) : lattice_(lattice), budget_(budget) {}

  const std::vector<Scaled>& neighbors(const Scaled& x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    auto star = lattice_.closed_star(x, budget_);
    std::erase(star, x);
    return cache_.emplace(x, std::move(star)).first->second;
  }

 private:
  const detail::Lattice& lattice_;
  std::uint64_t budget_;
  std::unordered_map<Scaled, std::vector<Scaled>, ScaledHash> cache_;
};

}  // namespace

long wall_count(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y, const Root& alpha) {
  if (!alpha.is_positive() || !datum.root_index(alpha.coeffs)) {
    throw ValidationError(ValidationCode::kInvalidArgument, alpha.to_string() + " is not a positive root");
  }
  Rational a = eval_root(datum, alpha, x);
  Rational b = eval_root(datum, alpha, y);
  if (a > b) std::swap(a, b);
  const Integer count = ceil(b) - floor(a) - 1;
  return count > 0 ? to_long(count) : 0;
}

DistanceReport wall_distance(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y) {
  const detail::Lattice lattice(datum);
  const Scaled sx = require_vertex(lattice, x);
  const Scaled sy = require_vertex(lattice, y);
  const auto [d, witness] = lattice.wall_distance(sx, sy);
  DistanceReport out;
  out.d = d;
  out.wall_count = d > 0 ? d - 1 : 0;
  if (witness) out.witness_root = datum.positive_roots()[*witness];
  return out;
}

bool adjacent(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y) { return wall_distance(datum, x, y).d == 1; }

VertexSet apartment_ball(const RootDatum& datum, const ApartmentPoint& center, long r, const Limits& limits) {
  if (r < 0) throw ValidationError(ValidationCode::kInvalidArgument, "radius must be nonnegative");
  const detail::Lattice lattice(datum);
  const Scaled c = require_vertex(lattice, center);
  const std::int64_t reach = r * lattice.denom();
  std::vector<detail::RootBound> bounds;
  for (std::size_t k = 0; k < lattice.num_positive(); ++k) {
    const std::int64_t a = lattice.root_value(k, c);
    bounds.push_back({k, a - reach, a + reach});
  }
  Scaled lo(lattice.rank()), hi(lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    lo[i] = c[i] - reach;
    hi[i] = c[i] + reach;
  }
  std::uint64_t candidates = 0;
  auto found = lattice.enumerate(lo, hi, bounds, limits.candidate_budget, candidates);
  std::erase_if(found, [&](const Scaled& y) { return lattice.wall_distance(c, y).first > r; });
  return detail::make_vertex_set(lattice, found, limits.fold_step_limit);
}

long simplicial_distance(const RootDatum& datum, const ApartmentPoint& x, const ApartmentPoint& y, long budget,
                         const Limits& limits) {
  const detail::Lattice lattice(datum);
  const Scaled sx = require_vertex(lattice, x);
  const Scaled sy = require_vertex(lattice, y);
  if (sx == sy) return 0;
  NeighborCache cache(lattice, limits.candidate_budget);
  std::unordered_set<Scaled, ScaledHash> seen{sx};
  std::vector<Scaled> frontier{sx};
  for (long depth = 1; depth <= budget && !frontier.empty(); ++depth) {
    std::vector<Scaled> next;
    for (const auto& v : frontier) {
      for (const auto& w : cache.neighbors(v)) {
        if (w == sy) return depth;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  throw ResourceError(ResourceCode::kSearchBudget,
                      "simplicial distance exceeds the search budget of " + std::to_string(budget) + " steps");
}

struct SimplicialDistanceTable::Impl {
  Impl(const RootDatum& datum, long radius, const Limits& lim)
      : lattice(datum), max_radius(radius), limits(lim), cache(lattice, lim.candidate_budget) {}

  detail::Lattice lattice;
  long max_radius;
  Limits limits;
  NeighborCache cache;
  std::vector<std::unordered_map<Scaled, long, ScaledHash>> balls;  // per alcove vertex
};

SimplicialDistanceTable::SimplicialDistanceTable(const RootDatum& datum, long max_radius, const Limits& limits)
    : impl_(std::make_unique<Impl>(datum, max_radius, limits)) {
  auto& im = *impl_;
  for (int i = 0; i <= datum.rank(); ++i) {
    std::unordered_map<Scaled, long, ScaledHash> dist;
    const Scaled root = im.lattice.alcove_vertex(i);
    dist.emplace(root, 0);
    std::vector<Scaled> frontier{root};
    for (long depth = 1; depth <= max_radius && !frontier.empty(); ++depth) {
      std::vector<Scaled> next;
      for (const auto& v : frontier) {
        for (const auto& w : im.cache.neighbors(v)) {
          if (dist.emplace(w, depth).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    im.balls.push_back(std::move(dist));
  }
}

SimplicialDistanceTable::~SimplicialDistanceTable() = default;
SimplicialDistanceTable::SimplicialDistanceTable(SimplicialDistanceTable&&) noexcept = default;
SimplicialDistanceTable& SimplicialDistanceTable::operator=(SimplicialDistanceTable&&) noexcept = default;

long SimplicialDistanceTable::max_radius() const { return impl_->max_radius; }

std::optional<long> SimplicialDistanceTable::distance(const ApartmentPoint& x, const ApartmentPoint& y) const {
  const auto& im = *impl_;
  const Scaled sx = require_vertex(im.lattice, x);
  const Scaled sy = require_vertex(im.lattice, y);
  const auto folded = im.lattice.fold(sx, im.limits.fold_step_limit, true);
  const int type = im.lattice.alcove_vertex_index(folded.point);
  const auto& ball = im.balls[static_cast<std::size_t>(type)];
  const auto it = ball.find(folded.map.apply(sy));
  if (it == ball.end()) return std::nullopt;
  return it->second;
}

PairwiseDistances SimplicialDistanceTable::pairwise(const std::vector<ApartmentPoint>& points) const {
  const auto& im = *impl_;
  std::vector<Scaled> scaled;
  scaled.reserve(points.size());
  for (const auto& p : points) scaled.push_back(require_vertex(im.lattice, p));
  PairwiseDistances out;
  out.size = points.size();
  out.wall.assign(out.size * out.size, 0);
  out.simplicial.assign(out.size * out.size, -1);
  for (std::size_t i = 0; i < out.size; ++i) {
    const auto folded = im.lattice.fold(scaled[i], im.limits.fold_step_limit, true);
    const auto& ball = im.balls[static_cast<std::size_t>(im.lattice.alcove_vertex_index(folded.point))];
    Scaled image;
    // Both metrics are symmetric: fill the upper triangle and mirror it.
    for (std::size_t j = i; j < out.size; ++j) {
      const auto w = static_cast<std::int16_t>(im.lattice.wall_distance(scaled[i], scaled[j]).first);
      out.wall[i * out.size + j] = out.wall[j * out.size + i] = w;
      folded.map.apply(scaled[j], image);
      const auto it = ball.find(image);
      if (it != ball.end()) {
        out.simplicial[i * out.size + j] = out.simplicial[j * out.size + i] = static_cast<std::int16_t>(it->second);
      }
    }
  }
  return out;
}

std::size_t SimplicialDistanceTable::explored_vertices() const {
  std::size_t total = 0;
  for (const auto& b : impl_->balls) total += b.size();
  return total;
}

}  // namespace alcove
