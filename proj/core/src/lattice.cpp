#include "alcove/detail/lattice.hpp"

#include <algorithm>
#include <string>

#include "alcove/errors.hpp"

namespace alcove::detail {

__extension__ using Wide = __int128;

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  Wide prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Wide p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Wide f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        const Wide v = (p * rows[r][c] - f * rows[rank][c]) / prev;
        rows[r][c] = static_cast<std::int64_t>(v);
      }
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

AffineMap AffineMap::identity(std::size_t dim) {
  AffineMap m;
  m.dim = dim;
  m.linear.assign(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) m.linear[i * dim + i] = 1;
  m.offset.assign(dim, 0);
  return m;
}

Scaled AffineMap::apply(const Scaled& p) const {
  Scaled out;
  apply(p, out);
  return out;
}

void AffineMap::apply(const Scaled& p, Scaled& out) const {
  out.assign(offset.begin(), offset.end());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out[i] += linear[i * dim + j] * p[j];
  }
}

Lattice::Lattice(const RootDatum& datum)
    : datum_(&datum),
      rank_(static_cast<std::size_t>(datum.rank())),
      num_positive_(datum.num_positive_roots()),
      denom_(datum.marks_lcm()) {
  coeffs_.reserve(num_positive_ * rank_);
  for (const auto& r : datum.positive_roots()) coeffs_.insert(coeffs_.end(), r.coeffs.begin(), r.coeffs.end());
  cartan_.resize(rank_ * rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) cartan_[i * rank_ + j] = datum.cartan(static_cast<int>(i), static_cast<int>(j));
  }
  marks_.assign(datum.highest_root_coeffs().begin(), datum.highest_root_coeffs().end());
  theta_pairing_.assign(datum.highest_coroot_pairing().begin(), datum.highest_coroot_pairing().end());
  two_rho_.assign(datum.two_rho_coeffs().begin(), datum.two_rho_coeffs().end());
}

std::optional<Scaled> Lattice::to_scaled(const ApartmentPoint& p) const {
  if (p.dim() != rank_) return std::nullopt;
  Scaled out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const Rational v = p[i] * denom_;
    if (!is_integer(v)) return std::nullopt;
    const Integer n = v.get_num();
    if (!n.fits_slong_p()) return std::nullopt;
    const long x = n.get_si();
    // keep headroom for sums over roots and fold arithmetic
    if (x > (std::int64_t{1} << 40) || x < -(std::int64_t{1} << 40)) return std::nullopt;
    out[i] = x;
  }
  return out;
}

ApartmentPoint Lattice::to_point(const Scaled& s) const {
  std::vector<Rational> coords;
  coords.reserve(rank_);
  for (auto v : s) coords.emplace_back(static_cast<long>(v), static_cast<long>(denom_));
  return ApartmentPoint(std::move(coords));
}

std::int64_t Lattice::root_value(std::size_t k, const Scaled& s) const {
  const int* m = &coeffs_[k * rank_];
  std::int64_t v = 0;
  for (std::size_t i = 0; i < rank_; ++i) v += m[i] * s[i];
  return v;
}

std::int64_t Lattice::two_rho_value(const Scaled& s) const {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < rank_; ++i) v += two_rho_[i] * s[i];
  return v;
}

std::int64_t Lattice::highest_value(const Scaled& s) const {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < rank_; ++i) v += marks_[i] * s[i];
  return v;
}

bool Lattice::is_vertex(const Scaled& s) const {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t k = 0; k < num_positive_; ++k) {
    if (root_value(k, s) % denom_ == 0) rows.emplace_back(coeffs_.begin() + static_cast<std::ptrdiff_t>(k * rank_),
                                                          coeffs_.begin() + static_cast<std::ptrdiff_t>((k + 1) * rank_));
  }
  if (rows.size() < rank_) return false;
  return integer_rank(std::move(rows)) == static_cast<int>(rank_);
}

bool Lattice::is_special(const Scaled& s) const {
  for (std::size_t k = 0; k < num_positive_; ++k) {
    if (root_value(k, s) % denom_ != 0) return false;
  }
  return true;
}

std::int64_t Lattice::wall_count(std::size_t k, const Scaled& x, const Scaled& y) const {
  std::int64_t a = root_value(k, x);
  std::int64_t b = root_value(k, y);
  if (a > b) std::swap(a, b);
  return std::max<std::int64_t>(0, ceil_div(b, denom_) - floor_div(a, denom_) - 1);
}

std::pair<std::int64_t, std::optional<std::size_t>> Lattice::wall_distance(const Scaled& x, const Scaled& y) const {
  if (x == y) return {0, std::nullopt};
  std::int64_t best = -1;
  std::size_t witness = 0;
  for (std::size_t k = 0; k < num_positive_; ++k) {
    const std::int64_t w = wall_count(k, x, y);
    if (w > best) {
      best = w;
      witness = k;
    }
  }
  return {best + 1, witness};
}

FoldResult Lattice::fold(const Scaled& start, std::size_t step_limit, bool track_map) const {
  FoldResult out;
  out.point = start;
  if (track_map) out.map = AffineMap::identity(rank_);
  Scaled& s = out.point;
  const std::size_t n = rank_;
  while (true) {
    const std::int64_t excess = highest_value(s) - denom_;
    int wall = -1;
    if (excess > 0) {
      wall = 0;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (s[i] < 0) {
          wall = static_cast<int>(i) + 1;
          break;
        }
      }
    }
    if (wall < 0) break;
    if (++out.steps > step_limit) {
      throw ResourceError(ResourceCode::kFoldSteps, "fold exceeded " + std::to_string(step_limit) + " reflections");
    }
    if (wall == 0) {
      for (std::size_t j = 0; j < n; ++j) s[j] -= excess * theta_pairing_[j];
      if (track_map) {
        // x -> x - (theta(x) - 1) theta^vee
        std::vector<std::int64_t> row(n, 0);
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t k = 0; k < n; ++k) row[c] += marks_[k] * out.map.linear[k * n + c];
        }
        std::int64_t off = -denom_;
        for (std::size_t k = 0; k < n; ++k) off += marks_[k] * out.map.offset[k];
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t c = 0; c < n; ++c) out.map.linear[j * n + c] -= theta_pairing_[j] * row[c];
          out.map.offset[j] -= theta_pairing_[j] * off;
        }
      }
    } else {
      const std::size_t i = static_cast<std::size_t>(wall - 1);
      const std::int64_t ti = s[i];
      for (std::size_t j = 0; j < n; ++j) s[j] -= ti * cartan_[j * n + i];
      if (track_map) {
        std::vector<std::int64_t> row(out.map.linear.begin() + static_cast<std::ptrdiff_t>(i * n),
                                      out.map.linear.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        const std::int64_t off = out.map.offset[i];
        for (std::size_t j = 0; j < n; ++j) {
          const std::int64_t a = cartan_[j * n + i];
          if (a == 0) continue;
          for (std::size_t c = 0; c < n; ++c) out.map.linear[j * n + c] -= a * row[c];
          out.map.offset[j] -= a * off;
        }
      }
    }
  }
  return out;
}

Scaled Lattice::alcove_vertex(int i) const {
  Scaled v(rank_, 0);
  if (i > 0) v[static_cast<std::size_t>(i - 1)] = denom_ / marks_[static_cast<std::size_t>(i - 1)];
  return v;
}

int Lattice::alcove_vertex_index(const Scaled& s) const {
  for (int i = 0; i <= static_cast<int>(rank_); ++i) {
    if (s == alcove_vertex(i)) return i;
  }
  return -1;
}

std::set<Scaled> Lattice::enumerate(const Scaled& lo, const Scaled& hi, std::span<const RootBound> bounds,
                                    std::uint64_t budget, std::uint64_t& candidates) const {
  std::set<Scaled> found;
  const std::size_t n = rank_;
  for (int c : datum_->vertex_denominators()) {
    const std::int64_t step = denom_ / c;
    Scaled first(n), last(n);
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      first[i] = ceil_div(lo[i], step) * step;
      last[i] = floor_div(hi[i], step) * step;
      if (first[i] > last[i]) empty = true;
    }
    if (empty) continue;
    // suffix_min[b][i] / suffix_max[b][i]: range of the bound's root over coordinates i..n-1
    std::vector<std::vector<std::int64_t>> suffix_min(bounds.size(), std::vector<std::int64_t>(n + 1, 0));
    std::vector<std::vector<std::int64_t>> suffix_max(bounds.size(), std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t b = 0; b < bounds.size(); ++b) {
      const int* m = &coeffs_[bounds[b].root * rank_];
      for (std::size_t i = n; i-- > 0;) {
        suffix_min[b][i] = suffix_min[b][i + 1] + m[i] * first[i];
        suffix_max[b][i] = suffix_max[b][i + 1] + m[i] * last[i];
      }
    }
    Scaled point(n, 0);
    // partial[i][b]: value of bound b's root on coordinates 0..i-1
    std::vector<std::vector<std::int64_t>> partial(n + 1, std::vector<std::int64_t>(bounds.size(), 0));
    struct Walker {
      const Lattice& self;
      std::span<const RootBound> bounds;
      const Scaled& first;
      const Scaled& last;
      std::int64_t step;
      const std::vector<std::vector<std::int64_t>>& suffix_min;
      const std::vector<std::vector<std::int64_t>>& suffix_max;
      std::vector<std::vector<std::int64_t>>& partial;
      Scaled& point;
      std::set<Scaled>& found;
      std::uint64_t budget;
      std::uint64_t& candidates;

      void run(std::size_t i) {
        const std::size_t n = point.size();
        if (i == n) {
          if (self.is_vertex(point)) found.insert(point);
          return;
        }
        for (std::int64_t v = first[i]; v <= last[i]; v += step) {
          if (++candidates > budget) {
            throw ResourceError(ResourceCode::kCandidateBudget,
                                "vertex enumeration exceeded the candidate budget of " + std::to_string(budget));
          }
          bool ok = true;
          bool overshoot = false;
          for (std::size_t b = 0; b < bounds.size(); ++b) {
            const std::int64_t m = self.coeffs_[bounds[b].root * self.rank_ + i];
            const std::int64_t here = partial[i][b] + m * v;
            partial[i + 1][b] = here;
            if (here + suffix_min[b][i + 1] > bounds[b].hi) {
              ok = false;
              // bound roots have nonnegative coefficients, so a larger v cannot recover
              if (m > 0) overshoot = true;
            } else if (here + suffix_max[b][i + 1] < bounds[b].lo) {
              ok = false;
            }
          }
          if (overshoot) break;
          if (!ok) continue;
          point[i] = v;
          run(i + 1);
        }
        point[i] = 0;
      }
    };
    Walker{*this, bounds, first, last, step, suffix_min, suffix_max, partial, point, found, budget, candidates}.run(0);
  }
  return found;
}

std::vector<Scaled> Lattice::closed_star(const Scaled& x, std::uint64_t budget) const {
  std::vector<RootBound> bounds;
  bounds.reserve(num_positive_);
  Scaled lo(rank_), hi(rank_);
  for (std::size_t k = 0; k < num_positive_; ++k) {
    const std::int64_t a = root_value(k, x);
    RootBound b{k, 0, 0};
    if (a % denom_ == 0) {
      b.lo = a - denom_;
      b.hi = a + denom_;
    } else {
      b.lo = floor_div(a, denom_) * denom_;
      b.hi = ceil_div(a, denom_) * denom_;
    }
    bounds.push_back(b);
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    const std::size_t k = *datum_->root_index(e);
    lo[i] = bounds[k].lo;
    hi[i] = bounds[k].hi;
  }
  std::uint64_t candidates = 0;
  const auto found = enumerate(lo, hi, bounds, budget, candidates);
  return {found.begin(), found.end()};
}

}  // namespace alcove::detail
