#include "alcove_cli/app.hpp"

#include <CLI11.hpp>

#include <optional>

#include "alcove/alcove.hpp"
#include "alcove_cli/render.hpp"
#include "alcove_cli/suites.hpp"

namespace alcove::cli {
namespace {

struct Globals {
  std::string format = "json";
  std::optional<long> q_eval;
  std::uint64_t budget = Limits{}.candidate_budget;
  std::uint64_t seed = 1;

  Format parsed_format() const {
    if (format == "csv") return Format::kCsv;
    if (format == "markdown") return Format::kMarkdown;
    return Format::kJson;
  }
  Limits limits() const {
    Limits l;
    l.candidate_budget = budget;
    return l;
  }
};

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--q-eval", g.q_eval, "Also evaluate every polynomial at this q")->check(CLI::Range(2L, 1L << 30));
  app.add_option("--budget", g.budget, "Candidate cap for vertex enumeration")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled checks");
}

Json envelope(const std::string& command) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  return out;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

ApartmentPoint parse_point(const RootDatum& datum, const std::string& text) {
  ApartmentPoint p = ApartmentPoint::parse(text);
  if (p.dim() != static_cast<std::size_t>(datum.rank())) {
    throw ValidationError(ValidationCode::kDimensionMismatch,
                          "point '" + text + "' has " + std::to_string(p.dim()) + " coordinates, type " +
                              datum.type().name() + " needs " + std::to_string(datum.rank()));
  }
  return p;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact combinatorics of affine root systems, apartments and ball-cardinality bounds", "alcove"};
  app.require_subcommand(1);
  Globals g;
  add_globals(app, g);

  std::string type_name;
  long radius = 0;
  std::optional<long> level;
  bool with_vertices = false;
  int max_rank = 8;
  std::string x_text, y_text;
  std::optional<long> search_radius;
  std::string suite;
  std::optional<std::string> suite_type;
  std::optional<long> suite_radius;
  std::size_t samples = 10000;
  int verify_max_rank = 12;
  long depth = 0;

  auto* info = app.add_subcommand("info", "Root datum: Cartan matrix, positive roots, c, c', Weyl degrees");
  info->add_option("--type", type_name, "Root system type, e.g. G2")->required();

  auto* table = app.add_subcommand("table", "Growth exponents and canonical-dimension bounds per type");
  table->add_option("--max-rank", max_rank, "Largest classical rank")->check(CLI::Range(2, 64));

  auto* ball = app.add_subcommand("ball", "Ball-cardinality polynomials for B(o, r)");
  ball->add_option("--type", type_name)->required();
  ball->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--level", level, "Quotient sum with level cap r'")->check(CLI::PositiveNumber);
  ball->add_flag("--vertices", with_vertices, "Include the vertices of rC");

  auto* distance = app.add_subcommand("distance", "Wall-separation and simplicial distance between two vertices");
  distance->add_option("--type", type_name)->required();
  distance->add_option("--x", x_text, "Coordinates alpha_i(x), comma separated fractions")->required();
  distance->add_option("--y", y_text)->required();
  distance->add_option("--search-radius", search_radius, "BFS cap for the simplicial distance (default 2d + 2)")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--type", suite_type);
  verify->add_option("--radius", suite_radius)->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--max-rank", verify_max_rank, "Largest classical rank for the table suite")->check(CLI::Range(2, 64));

  auto* sandwich = app.add_subcommand("sandwich", "Radii and bounds for compactly induced representations");
  sandwich->add_option("--type", type_name)->required();
  sandwich->add_option("--depth", depth, "R: sigma is trivial on P_{x,R}")->check(CLI::NonNegativeNumber);
  sandwich->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"alcove"};
  for (const auto& a : args) argv.push_back(a.c_str());

  RunResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitValidation;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  const Limits limits = g.limits();
  try {
    Json out;
    bool failed_check = false;
    std::optional<std::string> raw;  // preformatted output for table csv/markdown

    if (info->parsed()) {
      out = envelope("info");
      merge(out, to_json(build_root_datum(RootSystemType::parse(type_name))));
    } else if (table->parsed()) {
      const BoundsTable t = theorem_table(max_rank);
      out = envelope("table");
      out["max_rank"] = max_rank;
      merge(out, to_json(t));
      if (g.parsed_format() == Format::kCsv) raw = table_to_csv(t);
      if (g.parsed_format() == Format::kMarkdown) raw = table_to_markdown(t);
    } else if (ball->parsed()) {
      const RootDatum datum = build_root_datum(RootSystemType::parse(type_name));
      out = envelope("ball");
      if (level) {
        out["type"] = datum.type().name();
        out["radius"] = radius;
        out["level"] = *level;
        out["quotient_poly"] = to_json(quotient_ball_sum(datum, radius, *level, limits));
      } else {
        merge(out, to_json(ball_sum(datum, radius, limits), with_vertices));
      }
    } else if (distance->parsed()) {
      const RootDatum datum = build_root_datum(RootSystemType::parse(type_name));
      const ApartmentPoint x = parse_point(datum, x_text);
      const ApartmentPoint y = parse_point(datum, y_text);
      const DistanceReport rep = wall_distance(datum, x, y);
      const long cap = search_radius.value_or(2 * rep.d + 2);
      out = envelope("distance");
      out["type"] = datum.type().name();
      out["x"] = to_json(x);
      out["y"] = to_json(y);
      out["d"] = rep.d;
      out["d_simplicial"] = simplicial_distance(datum, x, y, cap, limits);
      out["witness_root"] = rep.witness_root ? to_json(*rep.witness_root) : Json(nullptr);
      out["wall_count"] = rep.wall_count;
      out["x_type"] = vertex_type(datum, x, limits);
      out["y_type"] = vertex_type(datum, y, limits);
    } else if (verify->parsed()) {
      SuiteOptions o;
      o.type = suite_type;
      o.radius = suite_radius;
      o.seed = g.seed;
      o.samples = samples;
      o.max_rank = verify_max_rank;
      o.limits = limits;
      out = envelope("verify");
      merge(out, run_suite(suite, o));
      failed_check = !out["pass"].get<bool>();
    } else if (sandwich->parsed()) {
      const RootDatum datum = build_root_datum(RootSystemType::parse(type_name));
      out = envelope("sandwich");
      out["type"] = datum.type().name();
      merge(out, to_json(cind_sandwich(datum, depth, radius, limits)));
    }

    if (g.q_eval) {
      out["q_eval"] = *g.q_eval;
      attach_q_values(out, *g.q_eval);
    }
    result.out = raw ? *raw : render(out, g.parsed_format());
    result.exit_code = failed_check ? kExitCheckFailed : kExitOk;
  } catch (const ValidationError& e) {
    result.exit_code = kExitValidation;
    result.err = std::string("validation error (") + to_string(e.code()) + "): " + e.what() + "\n";
  } catch (const ResourceError& e) {
    result.exit_code = kExitResource;
    result.err = std::string("resource error (") + to_string(e.code()) + "): " + e.what() + "\n";
  }
  return result;
}

}  // namespace alcove::cli
