#include "alcove/serialize.hpp"

#include <sstream>

namespace alcove {

Json to_json(const Root& root) { return Json(root.coeffs); }

Json to_json(const ApartmentPoint& point) { return Json(point.to_strings()); }

Json to_json(const RootDatum& datum) {
  Json roots = Json::array();
  for (const auto& r : datum.positive_roots()) roots.push_back(to_json(r));
  Json out;
  out["family"] = std::string(1, static_cast<char>(datum.type().family()));
  out["rank"] = datum.rank();
  out["type"] = datum.type().name();
  out["cartan_matrix"] = datum.cartan_matrix();
  out["positive_root_count"] = datum.num_positive_roots();
  out["positive_roots"] = std::move(roots);
  out["c"] = datum.highest_root_coeffs();
  out["c_prime"] = datum.two_rho_coeffs();
  out["weyl_degrees"] = weyl_degrees(datum);
  return out;
}

Json to_json(const VertexSet& vertices) {
  Json points = Json::array();
  for (const auto& p : vertices.points) points.push_back(to_json(p));
  Json out;
  out["count"] = vertices.size();
  out["points"] = std::move(points);
  out["types"] = vertices.types;
  out["per_type_counts"] = vertices.per_type_counts;
  return out;
}

Json to_json(const DistanceReport& report) {
  Json out;
  out["d"] = report.d;
  out["witness_root"] = report.witness_root ? to_json(*report.witness_root) : Json(nullptr);
  out["wall_count"] = report.wall_count;
  return out;
}

Json to_json(const RootDatum& datum, const ConcaveFunction& f) {
  Json values = Json::array();
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    values.push_back(Json{{"root", to_json(datum.roots()[k])}, {"value", to_string(f[k])}});
  }
  Json out;
  out["at_zero"] = to_string(f.at_zero());
  out["values"] = std::move(values);
  return out;
}

Json to_json(const QPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& [e, c] : poly.serialize()) terms.push_back(Json::array({e, c}));
  Json out;
  out["terms"] = std::move(terms);
  out["text"] = poly.to_string();
  return out;
}

Json to_json(const BallReport& report, bool include_vertices) {
  Json out;
  out["type"] = report.type.name();
  out["radius"] = report.radius;
  out["vertex_count_chamber"] = report.vertex_count_chamber;
  out["per_type_counts"] = report.per_type_counts;
  out["lower_poly"] = to_json(report.lower_poly);
  out["gamma_poly"] = to_json(report.gamma_poly);
  out["upper_poly"] = to_json(report.upper_poly);
  out["lower_degree"] = report.lower_poly.degree() ? Json(*report.lower_poly.degree()) : Json(nullptr);
  out["max_two_rho"] = to_string(report.max_two_rho);
  if (include_vertices) {
    Json v = to_json(report.vertices);
    v["exponents"] = report.exponents;
    out["vertices"] = std::move(v);
  }
  return out;
}

Json to_json(const BoundsTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["type"] = row.type.name();
    r["growth_exponent"] = to_string(row.growth_exponent);
    r["cdim_lower"] = row.cdim_lower;
    r["cdim_upper_depth_zero"] = row.cdim_upper_depth_zero;
    rows.push_back(std::move(r));
  }
  Json out;
  out["row_count"] = table.rows.size();
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const SandwichBounds& b) {
  Json out;
  out["R"] = b.R;
  out["r"] = b.r;
  out["lower_empty"] = b.lower_empty;
  out["lower_radius"] = b.lower_radius;
  out["lower_divisor"] = b.lower_divisor;
  out["lower_poly"] = to_json(b.lower_poly);
  out["upper_radius"] = b.upper_radius;
  out["upper_level"] = b.upper_level;
  out["upper_poly"] = to_json(b.upper_poly);
  out["upper_depth_zero_only"] = b.upper_depth_zero_only;
  out["upper_applies"] = b.upper_applies;
  return out;
}

std::string table_to_csv(const BoundsTable& table) {
  std::ostringstream out;
  out << "type,family,rank,growth_exponent,cdim_lower,cdim_upper_depth_zero\n";
  for (const auto& row : table.rows) {
    out << row.type.name() << ',' << static_cast<char>(row.type.family()) << ',' << row.type.rank() << ','
        << to_string(row.growth_exponent) << ',' << row.cdim_lower << ',' << row.cdim_upper_depth_zero << '\n';
  }
  return out.str();
}

std::string table_to_markdown(const BoundsTable& table) {
  std::ostringstream out;
  out << "| | A_{2n} | A_{2n+1} | B_3 | B_{d>=4} | C_d | D_{d>=4} |\n";
  out << "|---|---|---|---|---|---|---|\n";
  out << "| log_q(B(o,r)) >= | n(n+1) | (n+1)^2 | 5 | d^2/2 | d(d+1)/2 | d(d-1)/2 |\n";
  out << "| cdim >= | n(n+1) | (n+1)^2 | 5 | d^2/2 | d(d+1)/2 | d(d-1)/2 |\n\n";

  const char* exceptional[] = {"E6", "E7", "E8", "F4", "G2"};
  out << "| |";
  for (const char* t : exceptional) out << ' ' << t << " |";
  out << "\n|---|---|---|---|---|---|\n| log_q(B(o,r)) >= |";
  for (const char* t : exceptional) {
    const BoundsRow* row = table.find(t);
    out << ' ' << (row ? to_string(row->growth_exponent) : "-") << " |";
  }
  out << "\n| cdim >= |";
  for (const char* t : exceptional) {
    const BoundsRow* row = table.find(t);
    out << ' ' << (row ? std::to_string(row->cdim_lower) : "-") << " |";
  }
  out << "\n| cdim <= (depth zero) |";
  for (const char* t : exceptional) {
    const BoundsRow* row = table.find(t);
    out << ' ' << (row ? std::to_string(row->cdim_upper_depth_zero) : "-") << " |";
  }
  out << "\n\n| type | D | cdim lower | cdim upper (depth zero) |\n|---|---|---|---|\n";
  for (const auto& row : table.rows) {
    out << "| " << row.type.name() << " | " << to_string(row.growth_exponent) << " | " << row.cdim_lower << " | "
        << row.cdim_upper_depth_zero << " |\n";
  }
  return out.str();
}

}  // namespace alcove
