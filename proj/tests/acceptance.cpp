// Acceptance suite: one line per criterion, exit status 1 if any fails.
//
// Every criterion runs the library's own check and, where possible, an
// independent computation (closed forms, shadow areas, exhaustive LP search,
// vertex-set distance bounds) that must agree with it.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cgeom/lp_metric.hpp"
#include "cgeom/sphere.hpp"
#include "cgeom/verify.hpp"
#include "lp_oracle.hpp"
#include "oracles.hpp"

using namespace cgeom;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  Outcome() { detail.precision(10); }

  // Records a named condition; failures are listed in the detail text.
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

Vec v3(double x, double y, double z) { return Vec{{x, y, z}}; }

verify::CheckReport suite_check(const std::string& name) {
  verify::SuiteOptions o;
  o.filter = name;
  for (verify::CheckReport& r : verify::run_suite(o)) {
    if (r.name == name) return r;
  }
  throw GeometryError("missing check " + name);
}

Polytope rotate(const Polytope& p, double angle) {
  return apply_linear(LinearMap::rotation_x1x2(3, angle), p);
}

// Lower bound on the Hausdorff distance from p to every cube [-c, c]^3, from
// the directions e1 and e3 alone: |h(e1) - c| and |h(e3) - c| cannot both be
// small.
double axis_cube_lower_bound(const Polytope& p) {
  return std::abs(p.support(v3(1, 0, 0)) - p.support(v3(0, 0, 1))) / 2.0;
}

double hlawka_slack(const std::vector<Vec>& gens, const Vec& x, const Vec& y, const Vec& z) {
  auto h = [&](const Vec& u) {
    double s = 0.0;
    for (const Vec& g : gens) s += std::abs(u.dot(g));
    return s;
  };
  return h(x) + h(y) + h(z) + h(x + y + z) - h(x + y) - h(x + z) - h(y + z);
}

void criterion_1(Outcome& out) {
  const Polytope k = shapes::cube(3, 1.0);
  const Polytope l = rotate(k, std::numbers::pi / 4);
  std::vector<Vec> pts = k.vertices();
  pts.insert(pts.end(), l.vertices().begin(), l.vertices().end());
  const Polytope m = Polytope::from_vertices(pts);
  const Polytope kl = blaschke_sum(k, l);
  const Polytope mm = blaschke_sum(m, m);
  auto height = [](const Polytope& p) { return p.support(v3(0, 0, 1)) + p.support(v3(0, 0, -1)); };
  double vertical = 0.0, horizontal = 0.0;
  int n_vertical = 0, n_horizontal = 0;
  for (const Facet& f : kl.facets()) {
    if (std::abs(f.normal[2]) < 1e-12) {
      ++n_vertical;
      vertical = std::max(vertical, std::abs(f.area - 1.0));
    } else {
      ++n_horizontal;
      horizontal = std::max(horizontal, std::abs(f.area - 2.0));
    }
  }
  out.detail << "height(K#L)=" << height(kl) << " height(M#M)=" << height(mm);
  out.require(std::abs(height(kl) - 1.553774) < 1e-6, "height K#L");
  out.require(std::abs(height(mm) - 1.414214) < 1e-6, "height M#M");
  // M is an octagonal prism of height 1, so M # M = sqrt(2) M.
  out.require(std::abs(height(kl) - std::sqrt(1.0 + std::numbers::sqrt2)) < 1e-9, "closed form");
  out.require(n_vertical == 8 && n_horizontal == 2, "facet count");
  out.require(vertical < 1e-6 && horizontal < 1e-6, "facet areas");
  out.require(suite_check("not_monotone").passed, "suite check");
}

void criterion_2(Outcome& out) {
  const verify::CheckReport r = suite_check("projection_additivity");
  out.detail << "suite worst=" << r.measured;
  out.require(r.passed && r.measured < 1e-7, "suite check");
  // Shadow areas add under Blaschke addition.
  random::Rng rng(1002);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Polytope k = random::symmetric_polytope(rng);
    const Polytope l = random::symmetric_polytope(rng);
    const Polytope kl = blaschke_sum(k, l);
    for (int j = 0; j < 50; ++j) {
      const Vec u = random::direction(rng, 3);
      worst = std::max(worst, std::abs(oracles::brightness(kl, u) - oracles::brightness(k, u) -
                                       oracles::brightness(l, u)));
    }
  }
  out.detail << " shadow-area worst=" << worst;
  out.require(worst < 1e-7, "shadow areas");
}

void criterion_3(Outcome& out) {
  random::Rng rng(1003);
  double worst = 0.0, residual = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Polytope p = random::polytope(rng);
    SolverReport report;
    const Polytope q = solve_minkowski(surface_area_measure(p), {}, &report);
    worst = std::max(worst, oracles::vertex_hausdorff(q, recenter(p)));
    residual = std::max(residual, report.residual);
  }
  out.detail << "certified worst=" << worst << " area residual=" << residual;
  out.require(worst < 1e-6, "distance");
  out.require(residual < 1e-9, "area residual");
  out.require(suite_check("minkowski_round_trip").passed, "suite check");
}

void criterion_4(Outcome& out) {
  const verify::CheckReport r = suite_check("isometry");
  random::Rng rng(1004);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Polytope k = random::symmetric_polytope(rng);
    const Polytope l = random::symmetric_polytope(rng);
    worst = std::max(worst, std::abs(delta_bar_lp(projection_body(k), projection_body(l)) - delta_lp(k, l)));
  }
  out.detail << "suite worst=" << r.measured << " direct worst=" << worst;
  out.require(r.passed && r.measured < 2e-9, "suite check");
  out.require(worst < 2e-9, "direct");
}

void criterion_5(Outcome& out) {
  random::Rng rng(1005);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto mu = random::measure(rng, 3, 6);
    const auto nu = random::measure(rng, 3, 6);
    worst = std::max(worst, std::abs(lp_distance(mu, nu).value - lp_oracle::brute_force_lp(mu, nu)));
  }
  out.detail << "worst=" << worst;
  out.require(worst < 1e-6, "oracle agreement");
}

void criterion_6(Outcome& out) {
  const verify::CheckReport r = suite_check("blaschke_lipschitz");
  out.detail << "min slack=" << r.measured;
  out.require(r.passed && r.measured >= -3e-9, "suite check");
}

void criterion_7(Outcome& out) {
  const verify::CheckReport r = suite_check("gl_covariance");
  random::Rng rng(1007);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Polytope k = random::polytope(rng);
    const Polytope l = random::polytope(rng);
    const LinearMap phi = random::linear_map(rng, 3, 10.0);
    worst = std::max(worst, oracles::vertex_hausdorff(apply_linear(phi, blaschke_sum(k, l)),
                                                      blaschke_sum(apply_linear(phi, k), apply_linear(phi, l))));
  }
  out.detail << "suite worst=" << r.measured << " certified worst=" << worst;
  out.require(r.passed && r.measured < 1e-6, "suite check");
  out.require(worst < 1e-6, "certified");
}

void criterion_8(Outcome& out) {
  const verify::CheckReport r = suite_check("hlawka");
  random::Rng rng(1008);
  std::normal_distribution<double> gauss;
  double worst = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const Zonotope z = random::zonotope(rng, 3, 15);
    for (int t = 0; t < 10000; ++t) {
      Vec x(3), y(3), w(3);
      for (int c = 0; c < 3; ++c) {
        x[c] = gauss(rng);
        y[c] = gauss(rng);
        w[c] = gauss(rng);
      }
      worst = std::min(worst, hlawka_slack(z.generators(), x, y, w));
    }
  }
  out.detail << "suite min slack=" << r.measured << " direct min slack=" << worst;
  out.require(r.passed && r.measured >= -1e-9, "suite check");
  out.require(worst >= -1e-9, "direct");
}

void criterion_9(Outcome& out) {
  const verify::CheckReport box = verify::check_msum_constraints(UnconditionalBody2D::box(1.0, 2.0));
  const verify::CheckReport disc = verify::check_msum_constraints(UnconditionalBody2D::disc());
  const double goal = disc.metrics["goal"].get<double>();
  out.detail << "box residual=" << box.measured << " disc goal=" << goal;
  out.require(box.passed && box.measured < 1e-12, "box");
  out.require(std::abs(std::abs(goal) - (2.0 - std::numbers::sqrt2)) < 1e-12, "disc goal");
  // Closed forms of the disc residuals, |x| the Euclidean norm.
  out.require(std::abs(disc.metrics["f1"].get<double>() - (std::sqrt(8.0) - 1.0 - std::sqrt(5.0))) < 1e-12, "disc f1");
  out.require(std::abs(disc.metrics["f2"].get<double>() - (std::sqrt(20.0) - 2.0 - std::sqrt(8.0))) < 1e-12, "disc f2");
  out.require(suite_check("msum_constraints_disc").passed, "suite check");
}

void criterion_10(Outcome& out) {
  const verify::CheckReport r = suite_check("rotation_blaschke");
  // Recompute K * L for the unit cube from public operations.
  const Polytope k = shapes::cube(3, 1.0);
  const Polytope fk = rotate(k, k.surface_area());
  const Polytope sum = blaschke_sum(fk, fk);
  const Polytope result = rotate(sum, -sum.surface_area());
  const double gap = oracles::vertex_hausdorff(result, rotate(shapes::cube(3, std::numbers::sqrt2), -6.0));
  const double margin = axis_cube_lower_bound(result);
  out.detail << "certified gap=" << gap << " box margin>=" << margin
             << " suite margin=" << r.metrics["box_margin"].get<double>()
             << " bound slack=" << r.metrics["min_bound_slack"].get<double>();
  out.require(r.passed, "suite check");
  out.require(gap < 1e-6, "rotated cube");
  out.require(margin > 0.05, "box margin");
  out.require(r.metrics["random_pairs"].get<int>() == 50, "pair count");
}

void criterion_11(Outcome& out) {
  const std::vector<int> ms{1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
  const verify::CheckReport r = verify::check_metric_equivalence(ms);
  const auto lp = r.metrics["delta_lp"].get<std::vector<double>>();
  const auto hd = r.metrics["hausdorff"].get<std::vector<double>>();
  // K_m is the box with halfwidths (a, b, b): 4 b^2 = (1 + 1/m) / 4 and 4 a b = 1/4.
  // The sampled distance sees the maximizing direction within the mesh angle.
  const double cos_mesh = std::cos(sphere_sample(3, 6).mesh_angle);
  double worst_lp = 0.0;
  bool bracketed = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double m = ms[i];
    const double b = 0.25 * std::sqrt(1.0 + 1.0 / m);
    const double a = 1.0 / (16.0 * b);
    const double hausdorff = std::max(0.25 - a, std::numbers::sqrt2 * (b - 0.25));
    worst_lp = std::max(worst_lp, std::abs(lp[i] - 0.5 / m));
    bracketed = bracketed && hd[i] <= hausdorff + 1e-12 && hd[i] >= cos_mesh * hausdorff - 1e-12;
  }
  out.detail << "m=1000: delta_lp=" << lp.back() << " hausdorff=" << hd.back()
             << " closed-form delta_lp gap=" << worst_lp;
  out.require(r.passed, "suite check");
  out.require(lp.back() < 1e-3 && hd.back() < 1e-3, "below 1e-3");
  out.require(worst_lp < 1e-8, "delta_lp closed form");
  out.require(bracketed, "hausdorff closed form");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double seconds;  // runtime limit, 0 when none is stated
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Blaschke addition is not monotone", 1.0, criterion_1},
      {2, "projection body of a Blaschke sum", 30.0, criterion_2},
      {3, "Minkowski solver round trip", 60.0, criterion_3},
      {4, "projection body is an LP isometry", 0.0, criterion_4},
      {5, "LP distance against exhaustive search", 30.0, criterion_5},
      {6, "Lipschitz bound for Blaschke addition", 0.0, criterion_6},
      {7, "GL(n) covariance of Blaschke addition", 0.0, criterion_7},
      {8, "Hlawka inequality for zonotopes", 0.0, criterion_8},
      {9, "functional constraints on M", 0.0, criterion_9},
      {10, "rotation operation counterexample", 0.0, criterion_10},
      {11, "metric equivalence on a shrinking family", 0.0, criterion_11},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds > 0.0) out.require(elapsed < c.seconds, "runtime");
    failed += out.passed ? 0 : 1;
    std::printf("%s criterion %2d: %s (%.2f s) %s\n", out.passed ? "PASS" : "FAIL", c.id, c.title, elapsed,
                out.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
