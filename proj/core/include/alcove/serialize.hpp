#pragma once

#include <json.hpp>
#include <string>

#include "alcove/apartment.hpp"
#include "alcove/cartan.hpp"
#include "alcove/distance.hpp"
#include "alcove/growth.hpp"
#include "alcove/moyprasad.hpp"
#include "alcove/qpoly.hpp"

namespace alcove {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Root& root);
Json to_json(const ApartmentPoint& point);
Json to_json(const RootDatum& datum);
Json to_json(const VertexSet& vertices);
Json to_json(const DistanceReport& report);
Json to_json(const RootDatum& datum, const ConcaveFunction& f);
/// {"terms": [[exponent, "coefficient"], ...], "text": "2q^2 + q + 3"}
Json to_json(const QPolynomial& poly);
Json to_json(const BallReport& report, bool include_vertices = false);
Json to_json(const BoundsTable& table);
Json to_json(const SandwichBounds& bounds);

/// One line per row: type,family,rank,growth_exponent,cdim_lower,cdim_upper_depth_zero
std::string table_to_csv(const BoundsTable& table);
/// Classical-family formula table and exceptional value table, followed by the per-type rows.
std::string table_to_markdown(const BoundsTable& table);

}  // namespace alcove
