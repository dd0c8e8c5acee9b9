#include "alcove_cli/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "alcove/distance.hpp"
#include "alcove/errors.hpp"
#include "alcove/growth.hpp"
#include "alcove/moyprasad.hpp"

namespace alcove::cli {
namespace {

// Tallies checks and keeps the first few counterexamples.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  Json counterexamples = Json::array();

  void check(bool ok, const std::function<Json()>& witness) {
    ++checks;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < 10) counterexamples.push_back(witness());
  }

  Json report(const std::string& suite) const {
    Json out;
    out["suite"] = suite;
    out["pass"] = failures == 0;
    out["checks"] = checks;
    out["failures"] = failures;
    out["counterexamples"] = counterexamples;
    return out;
  }
};

std::vector<RootSystemType> types_or(const SuiteOptions& o, std::vector<RootSystemType> fallback) {
  if (o.type) return {RootSystemType::parse(*o.type)};
  return fallback;
}

std::vector<RootSystemType> small_types(int max_rank) {
  std::vector<RootSystemType> out;
  for (const auto& t : all_types_up_to_rank(max_rank, false)) out.push_back(t);
  out.emplace_back(Family::G, 2);
  return out;
}

Json pair_json(const ApartmentPoint& x, const ApartmentPoint& y) { return Json{{"x", to_json(x)}, {"y", to_json(y)}}; }

Rational two_rho_at(const RootDatum& datum, const ApartmentPoint& x) {
  return eval_root(datum, Root{datum.two_rho_coeffs()}, x);
}

Json metric_suite(const SuiteOptions& o) {
  const auto type = RootSystemType::parse(o.type.value_or("G2"));
  const long radius = o.radius.value_or(4);
  const RootDatum datum = build_root_datum(type);
  const VertexSet ball = apartment_ball(datum, ApartmentPoint::origin(datum.rank()), radius, o.limits);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  Tally t;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const auto& x = ball.points[pick(rng)];
    const auto& y = ball.points[pick(rng)];
    const auto& z = ball.points[pick(rng)];
    const long xy = wall_distance(datum, x, y).d;
    const long yx = wall_distance(datum, y, x).d;
    const long yz = wall_distance(datum, y, z).d;
    const long xz = wall_distance(datum, x, z).d;
    t.check(xy == yx, [&] { return Json{{"property", "symmetry"}, {"pair", pair_json(x, y)}}; });
    t.check((xy == 0) == (x == y), [&] { return Json{{"property", "definiteness"}, {"pair", pair_json(x, y)}}; });
    t.check(xz <= xy + yz, [&] {
      return Json{{"property", "triangle"}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)},
                  {"d_xy", xy}, {"d_yz", yz}, {"d_xz", xz}};
    });
  }
  Json out = t.report("metric");
  out["type"] = type.name();
  out["radius"] = radius;
  out["ball_size"] = ball.size();
  out["triangle_samples"] = o.samples;
  out["seed"] = o.seed;
  return out;
}

// d' against d on every ordered pair of B(o, radius).
Json distance_suite(const std::string& name, const RootSystemType& type, const SuiteOptions& o, bool require_gap) {
  const long radius = o.radius.value_or(4);
  const RootDatum datum = build_root_datum(type);
  const VertexSet ball = apartment_ball(datum, ApartmentPoint::origin(datum.rank()), radius, o.limits);
  const SimplicialDistanceTable table(datum, 2 * radius + 2, o.limits);
  const PairwiseDistances pd = table.pairwise(ball.points);
  Tally t;
  std::size_t gaps = 0;
  Json first_gap = nullptr;
  for (std::size_t i = 0; i < pd.size; ++i) {
    for (std::size_t j = 0; j < pd.size; ++j) {
      const long d = pd.wall_at(i, j);
      const auto dp = pd.simplicial_at(i, j);
      auto witness = [&](const char* prop) {
        Json w = pair_json(ball.points[i], ball.points[j]);
        w["property"] = prop;
        w["d"] = d;
        w["d_simplicial"] = dp ? Json(*dp) : Json(nullptr);
        return w;
      };
      t.check(dp.has_value() && *dp >= d, [&] { return witness("d_simplicial >= d"); });
      t.check(!dp || ((d == 1) == (*dp == 1)), [&] { return witness("d = 1 iff d_simplicial = 1"); });
      if (dp && *dp > d) {
        if (gaps == 0) first_gap = witness("d_simplicial > d");
        ++gaps;
      }
    }
  }
  if (require_gap) t.check(gaps > 0, [] { return Json{{"property", "a pair with d_simplicial > d exists"}}; });
  Json out = t.report(name);
  out["type"] = type.name();
  out["radius"] = radius;
  out["ball_size"] = ball.size();
  out["pairs"] = pd.size * pd.size;
  out["gap_pairs"] = gaps;
  out["witness"] = first_gap;
  return out;
}

Json polytope_suite(const SuiteOptions& o) {
  const long max_radius = o.radius.value_or(4);
  Tally t;
  Json per_type = Json::array();
  for (const auto& type : types_or(o, small_types(3))) {
    const RootDatum datum = build_root_datum(type);
    const ApartmentPoint origin = ApartmentPoint::origin(datum.rank());
    for (long r = 0; r <= max_radius; ++r) {
      // Inside C+, d(o, x) <= r forces every simple root value into [0, r].
      const std::vector<Rational> lo(static_cast<std::size_t>(datum.rank()), Rational(0));
      const std::vector<Rational> hi(static_cast<std::size_t>(datum.rank()), Rational(r));
      const VertexSet box = enumerate_box_vertices(datum, lo, hi, o.limits);
      std::set<ApartmentPoint> oracle;
      for (const auto& p : box.points) {
        if (wall_distance(datum, origin, p).d <= r) oracle.insert(p);
      }
      const VertexSet scaled = enumerate_scaled_alcove_vertices(datum, r, o.limits);
      const std::set<ApartmentPoint> got(scaled.points.begin(), scaled.points.end());
      t.check(oracle == got, [&] {
        Json w{{"type", type.name()}, {"radius", r}, {"oracle_count", oracle.size()}, {"enumerated_count", got.size()}};
        Json diff = Json::array();
        for (const auto& p : oracle) {
          if (!got.contains(p)) diff.push_back(to_json(p));
        }
        for (const auto& p : got) {
          if (!oracle.contains(p)) diff.push_back(to_json(p));
        }
        w["symmetric_difference"] = diff;
        return w;
      });
      if (r == max_radius) per_type.push_back(Json{{"type", type.name()}, {"radius", r}, {"count", got.size()}});
    }
  }
  Json out = t.report("polytope");
  out["per_type"] = per_type;
  return out;
}

Rational expected_growth(const RootSystemType& type) {
  const long d = type.rank();
  switch (type.family()) {
    case Family::A: {
      const long n = d / 2;
      return d % 2 == 0 ? Rational(n * (n + 1)) : Rational((n + 1) * (n + 1));
    }
    case Family::B: return d == 2 ? Rational(3) : d == 3 ? Rational(5) : Rational(d * d) / 2;
    case Family::C: return Rational(d * (d + 1) / 2);
    case Family::D: return Rational(d * (d - 1) / 2);
    case Family::E: return d == 6 ? Rational(16) : d == 7 ? Rational(27) : Rational(46);
    case Family::F: return Rational(11);
    case Family::G: return Rational(10) / 3;
  }
  return Rational(0);
}

Json table_suite(const SuiteOptions& o) {
  const int max_rank = o.max_rank;
  const BoundsTable table = theorem_table(max_rank);
  Tally t;
  for (const auto& row : table.rows) {
    const Rational want = expected_growth(row.type);
    const RootDatum datum = build_root_datum(row.type);
    t.check(row.growth_exponent == want, [&] {
      return Json{{"type", row.type.name()}, {"growth_exponent", to_string(row.growth_exponent)},
                  {"expected", to_string(want)}};
    });
    t.check(row.cdim_lower == to_long(ceil(want)), [&] {
      return Json{{"type", row.type.name()}, {"cdim_lower", row.cdim_lower}};
    });
    t.check(row.cdim_upper_depth_zero == static_cast<long>(datum.num_positive_roots()), [&] {
      return Json{{"type", row.type.name()}, {"cdim_upper_depth_zero", row.cdim_upper_depth_zero}};
    });
  }
  const BoundsRow* g2 = table.find("G2");
  t.check(g2 && g2->cdim_lower == 4, [] { return Json{{"type", "G2"}, {"property", "cdim lower bound 4"}}; });
  Json out = t.report("table");
  out["rows_checked"] = table.rows.size();
  return out;
}

Json growth_suite(const SuiteOptions& o) {
  const long max_radius = o.radius.value_or(3);
  Tally t;
  for (const auto& type : types_or(o, small_types(4))) {
    const RootDatum datum = build_root_datum(type);
    const Rational D = growth_exponent(datum);
    const long npos = static_cast<long>(datum.num_positive_roots());
    for (long r = 1; r <= max_radius; ++r) {
      const BallReport rep = ball_sum(datum, r, o.limits);
      auto where = [&](const char* prop) { return Json{{"type", type.name()}, {"radius", r}, {"property", prop}}; };
      t.check(rep.max_two_rho == Rational(r) * D, [&] {
        Json w = where("max 2rho = rD");
        w["max_two_rho"] = to_string(rep.max_two_rho);
        return w;
      });
      for (std::size_t v = 0; v < rep.vertices.size(); ++v) {
        t.check(Rational(rep.exponents[v]) <= two_rho_at(datum, rep.vertices.points[v]), [&] {
          Json w = where("exponent <= 2rho(x)");
          w["vertex"] = to_json(rep.vertices.points[v]);
          return w;
        });
      }
      const long deg = rep.lower_poly.degree().value_or(-1);
      t.check(Rational(deg) <= Rational(r) * D && Rational(deg) >= Rational(r) * D - npos,
              [&] { return where("rD - |Phi+| <= deg S(r) <= rD"); });
    }
  }
  return t.report("growth");
}

Json sandwich_suite(const SuiteOptions& o) {
  const long max_r = o.radius.value_or(8);
  Tally t;
  for (const auto& type : types_or(o, {RootSystemType(Family::A, 2), RootSystemType(Family::B, 2),
                                        RootSystemType(Family::G, 2)})) {
    const RootDatum datum = build_root_datum(type);
    long sum_c = 0;
    for (int c : datum.highest_root_coeffs()) sum_c += c;
    for (long R = 0; R <= 2; ++R) {
      for (long r = R; r <= max_r; ++r) {
        const SandwichBounds b = cind_sandwich(datum, R, r, o.limits);
        auto where = [&](const char* prop) { return Json{{"type", type.name()}, {"R", R}, {"r", r}, {"property", prop}}; };
        t.check(b.lower_radius == r - R - 2, [&] { return where("lower radius r - R - 2"); });
        t.check(b.upper_radius == 2 + (r + 1) * sum_c, [&] { return where("upper radius 2 + (r+1) sum c"); });
        for (long q0 : {2L, 3L, 5L}) {
          const Rational lower = b.lower_empty ? Rational(0) : Rational(b.lower_poly.evaluate(Integer(q0)));
          const Rational upper(b.upper_poly.evaluate(Integer(q0)));
          t.check(lower / Rational(b.lower_divisor) <= upper, [&] {
            Json w = where("lower / (d+1) <= upper");
            w["q"] = q0;
            return w;
          });
        }
      }
    }
  }
  return t.report("sandwich");
}

Json concavity_suite(const SuiteOptions& o) {
  const auto type = RootSystemType::parse(o.type.value_or("G2"));
  const long radius = o.radius.value_or(3);
  const RootDatum datum = build_root_datum(type);
  const VertexSet ball = apartment_ball(datum, ApartmentPoint::origin(datum.rank()), radius, o.limits);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::uniform_int_distribution<long> level(0, 2 * radius + 2);
  Tally t;
  const std::size_t n = std::min<std::size_t>(o.samples, 2000);
  for (std::size_t s = 0; s < n; ++s) {
    const auto& x = ball.points[pick(rng)];
    const auto& y = ball.points[pick(rng)];
    const auto& z = ball.points[pick(rng)];
    const ConcaveFunction fx = point_function(datum, x);
    const ConcaveFunction omega = omega_function(datum, {x, y, z});
    const ConcaveFunction both = pointwise_max(fx, point_function(datum, y));
    auto where = [&](const char* prop) {
      return Json{{"property", prop}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
    };
    t.check(is_concave(datum, fx), [&] { return where("point function concave"); });
    t.check(is_concave(datum, omega), [&] { return where("omega function concave"); });
    t.check(is_concave(datum, optimize(omega)), [&] { return where("optimized omega concave"); });
    t.check(is_concave(datum, both), [&] { return where("pointwise max concave"); });

    // [P_f : P_h] = [P_f : P_g][P_g : P_h] for f <= g <= h.
    const ConcaveFunction f = shift(fx, 1);
    const ConcaveFunction g = pointwise_max(f, shift(point_function(datum, y), 1));
    const ConcaveFunction h = pointwise_max(g, shift(point_function(datum, z), 1));
    const long fg = index_exponent(datum, f, g).exponent;
    const long gh = index_exponent(datum, g, h).exponent;
    const long fh = index_exponent(datum, f, h).exponent;
    t.check(fh == fg + gh, [&] { return where("index exponent additive"); });

    // d(x, y) <= r1 - r2 puts P_{x,r1} inside P_{y,r2}.
    long r1 = level(rng);
    long r2 = level(rng);
    if (r1 == r2) ++r1;
    if (r1 < r2) std::swap(r1, r2);
    const long d = wall_distance(datum, x, y).d;
    if (d <= r1 - r2) {
      t.check(filtration_contains(datum, x, r1, y, r2), [&] {
        Json w = where("filtration bridge");
        w["r1"] = r1;
        w["r2"] = r2;
        return w;
      });
    }
  }
  Json out = t.report("concavity");
  out["type"] = type.name();
  out["samples"] = n;
  out["seed"] = o.seed;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"metric", "distance", "g2-gap", "polytope",
                                              "table",  "growth",   "sandwich", "concavity"};
  return names;
}

Json run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "metric") return metric_suite(options);
  if (name == "distance") {
    return distance_suite(name, RootSystemType::parse(options.type.value_or("A2")), options, false);
  }
  if (name == "g2-gap") return distance_suite(name, RootSystemType(Family::G, 2), options, true);
  if (name == "polytope") return polytope_suite(options);
  if (name == "table") return table_suite(options);
  if (name == "growth") return growth_suite(options);
  if (name == "sandwich") return sandwich_suite(options);
  if (name == "concavity") return concavity_suite(options);
  throw ValidationError(ValidationCode::kInvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace alcove::cli
