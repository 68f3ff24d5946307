#include "cgeom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cgeom/io.hpp"
#include "cgeom/lp_metric.hpp"
#include "cgeom/oracle.hpp"
#include "cgeom/shapes.hpp"
#include "cgeom/solver.hpp"
#include "cgeom/verify.hpp"

namespace cgeom::cli {
namespace {

using io::Body;
using io::json;

struct Options {
  std::vector<std::string> inputs;
  std::string out_path;
  double tol = 0.0;  // 0 selects the command's default
  std::uint64_t seed = 1;
  std::string filter;
  std::string format = "json";
  int depth = 6;
  std::string p = "2";
  std::string m_body = "box:1,1";
  std::vector<double> direction;
  std::vector<double> box;
  double rotation = 0.0;
  std::vector<double> ball;
  std::string emit = "measure";
};

Body load_body(const std::string& path) { return io::body_from_json(io::read_json(path)); }

int dim_of(const Body& b) {
  return std::visit([](const auto& x) { return x.dim(); }, b);
}

Polytope as_polytope(const Body& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return *p;
  return std::get<Zonotope>(b).to_polytope();
}

ConvexBodyOracle as_oracle(const Body& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return ConvexBodyOracle::from_polytope(*p);
  return std::get<Zonotope>(b).oracle();
}

std::pair<Body, Body> load_pair(const Options& o) {
  Body a = load_body(o.inputs.at(0));
  Body b = load_body(o.inputs.at(1));
  if (dim_of(a) != dim_of(b)) throw GeometryError("dimension mismatch");
  return {std::move(a), std::move(b)};
}

// A measure file, or a body file standing for its surface area measure
// (polytope) or generating measure (zonotope).
DiscreteSphericalMeasure load_measure(const std::string& path) {
  const json j = io::read_json(path);
  if (j.is_object() && j.contains("type")) {
    const Body b = io::body_from_json(j);
    if (const auto* p = std::get_if<Polytope>(&b)) return surface_area_measure(*p);
    return generating_measure(std::get<Zonotope>(b));
  }
  return io::measure_from_json(j);
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  if (o.tol > 0.0) cfg.area_tolerance = o.tol;
  return cfg;
}

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(p > 1.0)) throw GeometryError("p must be a number > 1 or \"inf\"");
  return p;
}

// "box:a,b", "lp:p" or "lp:p,r", or "disc".
UnconditionalBody2D parse_m_body(const std::string& text) {
  if (text == "disc") return UnconditionalBody2D::disc();
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::vector<std::string> fields;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    for (std::size_t comma; (comma = rest.find(',', start)) != std::string::npos; start = comma + 1) {
      fields.push_back(rest.substr(start, comma - start));
    }
    fields.push_back(rest.substr(start));
  }
  try {
    if (kind == "box" && fields.size() == 2) {
      return UnconditionalBody2D::box(std::stod(fields[0]), std::stod(fields[1]));
    }
    if (kind == "lp" && (fields.size() == 1 || fields.size() == 2)) {
      const double p = fields[0] == "inf" ? std::numeric_limits<double>::infinity() : std::stod(fields[0]);
      return UnconditionalBody2D::lp_ball(p, fields.size() == 2 ? std::stod(fields[1]) : 1.0);
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw GeometryError("M must be box:a,b, lp:p[,r] or disc");
}

Vec direction_arg(const Options& o, int dim) {
  if (static_cast<int>(o.direction.size()) != dim) throw GeometryError("direction has the wrong dimension");
  return Eigen::Map<const Vec>(o.direction.data(), dim);
}

void emit(const json& j, const Options& o, std::ostream& out) { io::write_json(j, o.out_path, out); }

int cmd_sum(const Options& o, std::ostream& out) {
  auto [a, b] = load_pair(o);
  if (std::holds_alternative<Zonotope>(a) && std::holds_alternative<Zonotope>(b)) {
    emit(io::to_json(std::get<Zonotope>(a) + std::get<Zonotope>(b)), o, out);
  } else {
    emit(io::to_json(minkowski_sum(as_polytope(a), as_polytope(b))), o, out);
  }
  return kOk;
}

int cmd_blaschke(const Options& o, std::ostream& out) {
  auto [a, b] = load_pair(o);
  const Polytope sum = blaschke_sum(as_polytope(a), as_polytope(b), solver_config(o));
  json j = io::to_json(sum);
  j["height"] = io::height(sum);
  emit(j, o, out);
  return kOk;
}

int emit_oracle(const ConvexBodyOracle& body, const Options& o, std::ostream& out) {
  if (!o.direction.empty()) {
    emit(json{{"support", body.support(direction_arg(o, body.dim()))}}, o, out);
  } else {
    json j = io::to_json(outer_approximation(body, std::min(o.depth, 4)));
    j["approximation"] = "outer";
    emit(j, o, out);
  }
  return kOk;
}

int cmd_lp_sum(const Options& o, std::ostream& out) {
  auto [a, b] = load_pair(o);
  return emit_oracle(lp_sum(as_oracle(a), as_oracle(b), parse_p(o.p)), o, out);
}

int cmd_m_sum(const Options& o, std::ostream& out) {
  auto [a, b] = load_pair(o);
  return emit_oracle(m_sum(as_oracle(a), as_oracle(b), parse_m_body(o.m_body)), o, out);
}

int cmd_project(const Options& o, std::ostream& out) {
  emit(io::to_json(projection_body(as_polytope(load_body(o.inputs.at(0))))), o, out);
  return kOk;
}

int cmd_unproject(const Options& o, std::ostream& out) {
  const Body b = load_body(o.inputs.at(0));
  const Zonotope* z = std::get_if<Zonotope>(&b);
  if (!z) throw GeometryError("unproject needs a zonotope");
  emit(io::to_json(inverse_projection_body(*z, solver_config(o))), o, out);
  return kOk;
}

int cmd_hausdorff(const Options& o, std::ostream& out) {
  auto [a, b] = load_pair(o);
  const HausdorffResult r = hausdorff_distance(as_oracle(a), as_oracle(b), o.depth);
  emit(json{{"value", r.value}, {"error_bound", r.error_bound}}, o, out);
  return kOk;
}

int cmd_lp_distance(const Options& o, std::ostream& out) {
  const DiscreteSphericalMeasure mu = load_measure(o.inputs.at(0));
  const DiscreteSphericalMeasure nu = load_measure(o.inputs.at(1));
  if (mu.dim() != nu.dim()) throw GeometryError("dimension mismatch");
  const LpDistanceResult r = lp_distance(mu, nu, o.tol > 0.0 ? o.tol : 1e-9);
  emit(json{{"value", r.value},
            {"certificate_eps", r.certificate_eps},
            {"bisection_tolerance", r.bisection_tolerance}},
       o, out);
  return kOk;
}

int cmd_measure(const Options& o, std::ostream& out, bool box_given, bool rotated_given) {
  const bool ball_given = !o.ball.empty();
  const int sources = static_cast<int>(!o.inputs.empty()) + static_cast<int>(box_given || rotated_given) +
                      static_cast<int>(ball_given);
  if (sources != 1) throw GeometryError("give exactly one of FILE, --box/--rotated-box, --ball-approx");
  if (o.emit != "measure" && o.emit != "body") throw GeometryError("--emit must be measure or body");

  std::optional<Body> body;
  if (!o.inputs.empty()) {
    body = load_body(o.inputs[0]);
  } else if (ball_given) {
    const double depth = o.ball[1];
    if (depth != std::floor(depth) || depth < 0.0 || depth > 9.0) {
      throw GeometryError("ball depth must be an integer in [0, 9]");
    }
    body = shapes::ball_approx(3, o.ball[0], static_cast<int>(depth));
  } else {
    Vec hw = Vec::Constant(3, 0.5);
    if (!o.box.empty()) hw = Eigen::Map<const Vec>(o.box.data(), static_cast<Eigen::Index>(o.box.size()));
    if (hw.size() < 2) throw GeometryError("box needs at least two halfwidths");
    body = shapes::rotated_box(hw, o.rotation);
  }

  if (o.emit == "body") {
    emit(io::to_json(*body), o, out);
  } else if (const auto* p = std::get_if<Polytope>(&*body)) {
    emit(io::to_json(surface_area_measure(*p)), o, out);
  } else {
    emit(io::to_json(generating_measure(std::get<Zonotope>(*body))), o, out);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  verify::SuiteOptions so;
  so.seed = o.seed;
  so.filter = o.filter;
  if (o.tol > 0.0) so.tol = o.tol;
  const std::vector<verify::CheckReport> reports = verify::run_suite(so);
  if (reports.empty()) throw GeometryError("no check matches the filter \"" + o.filter + "\"");
  json arr = json::array();
  int failed = 0;
  for (const verify::CheckReport& r : reports) {
    arr.push_back(verify::to_json(r));
    err << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << r.measured
        << " tolerance=" << r.tolerance << '\n';
    failed += r.passed ? 0 : 1;
  }
  err << reports.size() - failed << '/' << reports.size() << " checks passed\n";
  emit(arr, o, out);
  return failed == 0 ? kOk : kCheckFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Body b = load_body(o.inputs.at(0));
  if (o.format == "json") {
    emit(io::to_json(b), o, out);
    return kOk;
  }
  if (o.format != "off") throw GeometryError("--format must be json or off");
  const std::string text = io::to_off(as_polytope(b));
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw GeometryError("cannot write " + o.out_path);
    file << text;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex bodies: sums, Blaschke addition, projection bodies and metrics"};
  app.name("cgeom");
  app.require_subcommand(1, 1);
  Options o;

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out_path, "Write the result to PATH"); };
  auto add_two = [&](CLI::App* c) {
    c->add_option("inputs", o.inputs, "Two body files")->required()->expected(2);
    add_out(c);
  };
  auto add_one = [&](CLI::App* c) {
    c->add_option("input", o.inputs, "Body file")->required()->expected(1);
    add_out(c);
  };

  CLI::App* sum = app.add_subcommand("sum", "Minkowski sum");
  add_two(sum);
  CLI::App* blaschke = app.add_subcommand("blaschke", "Blaschke sum (adds surface area measures)");
  add_two(blaschke);
  blaschke->add_option("--tol", o.tol, "Relative facet-area tolerance");
  CLI::App* lp = app.add_subcommand("lp-sum", "Lp sum, as support value or outer polytope");
  add_two(lp);
  lp->add_option("--p", o.p, "Exponent p > 1, or inf")->capture_default_str();
  CLI::App* msum = app.add_subcommand("m-sum", "M-sum h_M(h_K, h_L)");
  add_two(msum);
  msum->add_option("-M,--m-body", o.m_body, "box:a,b | lp:p[,r] | disc")->capture_default_str();
  for (CLI::App* c : {lp, msum}) {
    c->add_option("--direction", o.direction, "Evaluate the support function here")->delimiter(',');
    c->add_option("--depth", o.depth, "Sphere sample depth of the outer polytope (max 4)")->check(CLI::Range(0, 9));
  }
  CLI::App* project = app.add_subcommand("project", "Projection body");
  add_one(project);
  CLI::App* unproject = app.add_subcommand("unproject", "Inverse projection body of a zonotope");
  add_one(unproject);
  unproject->add_option("--tol", o.tol, "Relative facet-area tolerance");
  CLI::App* haus = app.add_subcommand("hausdorff", "Sampled Hausdorff distance with error bound");
  add_two(haus);
  haus->add_option("--depth", o.depth, "Sphere sample depth")->check(CLI::Range(0, 9));
  CLI::App* lpd = app.add_subcommand("lp-distance", "Levy-Prokhorov distance of two measures");
  lpd->add_option("inputs", o.inputs, "Two measure (or body) files")->required()->expected(2);
  add_out(lpd);
  lpd->add_option("--tol", o.tol, "Bisection tolerance");

  CLI::App* measure = app.add_subcommand("measure", "Surface area measure of a body or built-in shape");
  measure->add_option("input", o.inputs, "Body file")->expected(0, 1);
  add_out(measure);
  CLI::Option* box_opt = measure->add_flag("--box", "Axis box, the unit cube unless --halfwidths is given");
  measure->add_option("--halfwidths", o.box, "Box halfwidths")->delimiter(',');
  CLI::Option* rot_opt = measure->add_option("--rotated-box", o.rotation, "Rotate the box in the x1x2-plane");
  measure->add_option("--ball-approx", o.ball, "Inscribed ball polytope: radius s, icosphere depth k")
      ->expected(2);
  measure->add_option("--emit", o.emit, "measure or body")->capture_default_str();

  CLI::App* ver = app.add_subcommand("verify", "Run the verification suite");
  add_out(ver);
  ver->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  ver->add_option("--filter", o.filter, "Run checks whose name contains NAME");
  ver->add_option("--tol", o.tol, "Metric bisection tolerance");

  CLI::App* exp = app.add_subcommand("export", "Write a body as JSON or OFF mesh");
  add_one(exp);
  exp->add_option("--format", o.format, "json or off")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (sum->parsed()) return cmd_sum(o, out);
    if (blaschke->parsed()) return cmd_blaschke(o, out);
    if (lp->parsed()) return cmd_lp_sum(o, out);
    if (msum->parsed()) return cmd_m_sum(o, out);
    if (project->parsed()) return cmd_project(o, out);
    if (unproject->parsed()) return cmd_unproject(o, out);
    if (haus->parsed()) return cmd_hausdorff(o, out);
    if (lpd->parsed()) return cmd_lp_distance(o, out);
    if (measure->parsed()) return cmd_measure(o, out, box_opt->count() > 0, rot_opt->count() > 0);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const SolverStalled& e) {
    err << json{{"error", e.what()}, {"residual", e.residual()}, {"iterations", e.iterations()}}.dump() << '\n';
    return kSolverStalled;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cgeom::cli
