#pragma once

#include <set>

#include "alcove/apartment.hpp"
#include "alcove/detail/lattice.hpp"

namespace alcove::detail {

VertexSet make_vertex_set(const Lattice& lattice, const std::set<Scaled>& points, std::size_t fold_step_limit);

/// Scaled numerator of a rational bound, rounded inward.
std::int64_t scaled_floor(const Rational& value, std::int64_t denom);
std::int64_t scaled_ceil(const Rational& value, std::int64_t denom);

}  // namespace alcove::detail
