#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "cgeom/lp_metric.hpp"
#include "cgeom/shapes.hpp"
#include "lp_oracle.hpp"

using namespace cgeom;

namespace {

Vec v3(double x, double y, double z) { return Vec{{x, y, z}}; }

DiscreteSphericalMeasure point_mass(const Vec& u, double w) { return DiscreteSphericalMeasure(3, {{u, w}}); }

}  // namespace

TEST_SUITE("lp_metric") {
  TEST_CASE("max flow on a small network") {
    MaxFlow f(6);
    f.add_edge(0, 1, 16);
    f.add_edge(0, 2, 13);
    f.add_edge(1, 2, 10);
    f.add_edge(2, 1, 4);
    f.add_edge(1, 3, 12);
    f.add_edge(3, 2, 9);
    f.add_edge(2, 4, 14);
    f.add_edge(4, 3, 7);
    f.add_edge(3, 5, 20);
    f.add_edge(4, 5, 4);
    CHECK(f.run(0, 5) == 23);
    MaxFlow none(3);
    none.add_edge(0, 1, 5);
    CHECK(none.run(0, 2) == 0);
  }

  TEST_CASE("point masses at orthogonal directions") {
    const auto mu = point_mass(v3(1, 0, 0), 1.0);
    const auto nu = point_mass(v3(0, 1, 0), 1.0);
    CHECK(lp_feasible(mu, nu, 1.0));
    CHECK_FALSE(lp_feasible(mu, nu, 0.99));
    CHECK(lp_distance(mu, nu).value == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("equal directions with different mass") {
    const auto mu = point_mass(v3(0, 0, 1), 1.0);
    const auto nu = point_mass(v3(0, 0, 1), 1.3);
    CHECK(lp_feasible(mu, nu, 0.3));
    CHECK_FALSE(lp_feasible(mu, nu, 0.29));
    CHECK(std::abs(lp_distance(mu, nu).value - 0.3) < 2e-9);
    for (double c : {0.05, 0.5, 1.7, 4.0}) {
      CHECK(std::abs(lp_distance(mu, point_mass(v3(0, 0, 1), 1.0 + c)).value - c) < 2e-9);
    }
    CHECK(lp_distance(mu, mu).value == 0.0);
    CHECK_THROWS_AS(lp_feasible(mu, nu, 0.0), InvalidMeasure);
  }

  TEST_CASE("agrees with subset enumeration") {
    random::Rng rng(11);
    for (int t = 0; t < 40; ++t) {
      const auto mu = random::measure(rng, 3, 5);
      const auto nu = random::measure(rng, 3, 5);
      const double expected = lp_oracle::brute_force_lp(mu, nu);
      const LpDistanceResult r = lp_distance(mu, nu);
      CHECK(std::abs(r.value - expected) < 1e-6);
      for (double eps : lp_oracle::eps_grid(mu, nu, 40)) {
        CHECK(std::abs(lp_deficiency(mu, nu, eps) - lp_oracle::brute_force_deficiency(mu, nu, eps)) < 1e-10);
      }
    }
  }

  TEST_CASE("certificate brackets the distance") {
    random::Rng rng(12);
    for (int t = 0; t < 20; ++t) {
      const auto mu = random::measure(rng, 3, 6);
      const auto nu = random::measure(rng, 3, 6);
      const LpDistanceResult r = lp_distance(mu, nu, 1e-9);
      CHECK(lp_feasible(mu, nu, r.certificate_eps));
      if (r.certificate_eps > 2 * r.bisection_tolerance) {
        CHECK_FALSE(lp_feasible(mu, nu, r.certificate_eps - 2 * r.bisection_tolerance));
      }
      // Feasibility is monotone in eps.
      for (double e = r.certificate_eps; e < 3.0; e += 0.37) CHECK(lp_feasible(mu, nu, e));
    }
  }

  TEST_CASE("metric axioms") {
    random::Rng rng(13);
    for (int t = 0; t < 20; ++t) {
      const auto a = random::measure(rng, 3, 6);
      const auto b = random::measure(rng, 3, 6);
      const auto c = random::measure(rng, 3, 6);
      const double ab = lp_distance(a, b).value;
      CHECK(ab > 0.0);
      CHECK(std::abs(ab - lp_distance(b, a).value) < 2e-9);
      CHECK(lp_distance(a, a).value == 0.0);
      CHECK(ab <= lp_distance(a, c).value + lp_distance(c, b).value + 4e-9);
      // Adding a common measure cannot increase the distance.
      CHECK(lp_distance(add_measures(a, c), add_measures(b, c)).value <= ab + 2e-9);
    }
  }

  TEST_CASE("surface area measures of cubes") {
    const Polytope unit = shapes::cube(3, 1.0);
    for (double s : {1.05, 1.1, 0.9}) {
      // All six facets gain or lose s^2 - 1 and are sqrt 2 apart.
      CHECK(delta_lp(shapes::cube(3, s), unit) == doctest::Approx(6.0 * std::abs(s * s - 1.0)).epsilon(1e-8));
    }
    CHECK(delta_lp(unit, unit) == 0.0);
    CHECK(delta_lp(translate(unit, v3(1, 2, 3)), unit) == 0.0);
  }

  TEST_CASE("generating measures of segments") {
    const Zonotope segment({v3(1, 0, 0)});
    CHECK(delta_bar_lp(segment, segment.scaled(1.3)) == doctest::Approx(0.6).epsilon(1e-8));
    const Zonotope cube({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
    CHECK(delta_bar_lp(cube, cube) == 0.0);
  }

  TEST_CASE("mismatched dimensions") {
    const DiscreteSphericalMeasure planar(2, {{Vec{{1.0, 0.0}}, 1.0}});
    CHECK_THROWS_AS(lp_distance(planar, point_mass(v3(1, 0, 0), 1.0)), InvalidMeasure);
  }
}
