#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cgeom/oracle.hpp"
#include "cgeom/polytope.hpp"
#include "cgeom/projection.hpp"
#include "cgeom/shapes.hpp"
#include "oracles.hpp"

using namespace cgeom;

namespace {

Vec v3(double x, double y, double z) { return Vec{{x, y, z}}; }

// Weight of the atom at direction u, or 0.
double weight_at(const DiscreteSphericalMeasure& mu, const Vec& u) {
  for (const Atom& a : mu.atoms()) {
    if ((a.u - u).norm() < 1e-9) return a.w;
  }
  return 0.0;
}

ConvexBodyOracle constant_support(double c) {
  return ConvexBodyOracle(3, [c](const Vec& x) { return c * x.norm(); }, c);
}

}  // namespace

TEST_SUITE("bodies") {
  TEST_CASE("directions and linear maps") {
    const Direction d = Direction::normalize(v3(3, 0, 4));
    CHECK(d[0] == doctest::Approx(0.6));
    CHECK_THROWS_AS(Direction(v3(1, 1, 0)), GeometryError);
    CHECK_THROWS_AS(Direction::normalize(Vec::Zero(3)), GeometryError);
    const LinearMap phi = LinearMap::diagonal(v3(2, 1, 1));
    CHECK(phi.determinant() == 2.0);
    CHECK((phi.inverse_transpose().matrix() - Vec(v3(0.5, 1, 1)).asDiagonal().toDenseMatrix()).norm() < 1e-15);
    CHECK_THROWS_AS(LinearMap::diagonal(v3(1, 1e-12, 1)), GeometryError);
  }

  TEST_CASE("surface area measures of standard bodies") {
    const DiscreteSphericalMeasure cube = surface_area_measure(shapes::cube(3, 1.0));
    CHECK(cube.size() == 6);
    for (const Atom& a : cube.atoms()) CHECK(a.w == doctest::Approx(1.0).epsilon(1e-15));

    const DiscreteSphericalMeasure big = surface_area_measure(shapes::cube(3, 2.0));
    for (int k = 0; k < 3; ++k) {
      CHECK(weight_at(big, Vec::Unit(3, k)) == doctest::Approx(4.0));
      CHECK(weight_at(big, -Vec::Unit(3, k)) == doctest::Approx(4.0));
    }

    // Octahedron facets are copies of conv{e1, e2, e3}.
    const DiscreteSphericalMeasure oct = surface_area_measure(shapes::cross_polytope(3));
    const double tri = 0.5 * oracles::cross(Vec::Unit(3, 1) - Vec::Unit(3, 0), Vec::Unit(3, 2) - Vec::Unit(3, 0)).norm();
    CHECK(oct.size() == 8);
    for (int m = 0; m < 8; ++m) {
      const Vec u = v3(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1) / std::sqrt(3.0);
      CHECK(weight_at(oct, u) == doctest::Approx(tri).epsilon(1e-14));
    }
    CHECK(tri == doctest::Approx(std::sqrt(3.0) / 2.0));
  }

  TEST_CASE("measure construction and admissibility") {
    DiscreteSphericalMeasure mu(3, {{v3(2, 0, 0), 1.0}, {v3(1, 1e-12, 0), 0.5}, {v3(0, 1, 0), 0.0}});
    CHECK(mu.size() == 1);
    CHECK(mu.atoms()[0].w == 1.5);
    CHECK(mu.atoms()[0].u.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(DiscreteSphericalMeasure(3, {{v3(1, 0, 0), -1.0}}), InvalidMeasure);
    CHECK_THROWS_AS(DiscreteSphericalMeasure(3, {{v3(0, 0, 0), 1.0}}), InvalidMeasure);
    CHECK_THROWS_WITH(mu.check_minkowski_conditions(), "measure centroid nonzero");
    const DiscreteSphericalMeasure flat(3, {{v3(1, 0, 0), 1}, {v3(-1, 0, 0), 1}, {v3(0, 1, 0), 1}, {v3(0, -1, 0), 1}});
    CHECK_THROWS_WITH(flat.check_minkowski_conditions(), "measure degenerate");
    CHECK(flat.is_even());

    const DiscreteSphericalMeasure cube = surface_area_measure(shapes::cube(3, 1.0));
    CHECK(add_measures(cube, DiscreteSphericalMeasure(3)).atoms().size() == 6);
    const DiscreteSphericalMeasure doubled = add_measures(cube, cube);
    for (const Atom& a : doubled.atoms()) CHECK(a.w == 2.0);
    const DiscreteSphericalMeasure mixed =
        add_measures(cube, surface_area_measure(shapes::rotated_box(Vec::Constant(3, 0.5), std::numbers::pi / 4)));
    CHECK(mixed.size() == 10);
    CHECK(weight_at(mixed, v3(0, 0, 1)) == doctest::Approx(2.0));
    CHECK(weight_at(mixed, v3(1, 1, 0) / std::sqrt(2.0)) == doctest::Approx(1.0));
    CHECK(mixed.total_mass() == doctest::Approx(12.0).epsilon(1e-15));
  }

  TEST_CASE("Minkowski sums") {
    const Polytope cube = shapes::cube(3, 1.0);
    const Polytope sum = minkowski_sum(cube, cube);
    CHECK(sum.vertices().size() == 8);
    CHECK(sum.volume() == doctest::Approx(8.0));
    CHECK(sum.support(v3(1, 1, 1)) == 3.0);

    random::Rng rng(1);
    const Polytope p = random::polytope(rng);
    const Polytope q = random::polytope(rng);
    const Polytope pq = minkowski_sum(p, q);
    for (int i = 0; i < 1000; ++i) {
      std::normal_distribution<double> g;
      const Vec x = v3(g(rng), g(rng), g(rng));
      CHECK(std::abs(pq.support(x) - p.support(x) - q.support(x)) < 1e-9);
    }
    CHECK_THROWS_AS(minkowski_sum(cube, shapes::cube(2, 1.0)), GeometryError);

    // [-e1, e1] + [-e2, e2] is the flat square: a zonotope, not a body.
    const Zonotope square({Vec::Unit(3, 0), Vec::Unit(3, 1)});
    CHECK(square.support(v3(1, 1, 5)) == 2.0);
    CHECK(square.support(v3(0, 0, 1)) == 0.0);
    CHECK_FALSE(square.is_full_dimensional());
    CHECK_THROWS_AS(square.to_polytope(), DegenerateBody);
  }

  TEST_CASE("Lp sums") {
    const ConvexBodyOracle three = constant_support(3.0);
    const ConvexBodyOracle four = constant_support(4.0);
    const Vec x = v3(0, 1, 0);
    CHECK(lp_sum_support(three, four, 2.0, x) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(lp_sum_support(three, ConvexBodyOracle::point(3), 3.5, x) == doctest::Approx(3.0).epsilon(1e-15));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(lp_sum_support(constant_support(1.0), constant_support(1.0), inf, x) == 1.0);
    const ConvexBodyOracle shifted =
        ConvexBodyOracle::from_polytope(translate(shapes::cube(3, 1.0), v3(2, 0, 0)));
    CHECK_THROWS_WITH(lp_sum_support(shifted, three, 2.0, v3(-1, 0, 0)), "body does not contain origin");
    CHECK_THROWS_AS(lp_sum(three, four, 1.0), GeometryError);
  }

  TEST_CASE("M sums") {
    random::Rng rng(2);
    const ConvexBodyOracle k = ConvexBodyOracle::from_polytope(random::symmetric_polytope(rng));
    const ConvexBodyOracle l = ConvexBodyOracle::from_polytope(random::symmetric_polytope(rng));
    const UnconditionalBody2D box = UnconditionalBody2D::box(0.7, 2.5);
    const UnconditionalBody2D disc = UnconditionalBody2D::disc();
    for (int i = 0; i < 200; ++i) {
      const Vec x = random::direction(rng, 3) * 3.0;
      CHECK(std::abs(m_sum_support(k, l, box, x) - (0.7 * k(x) + 2.5 * l(x))) < 1e-12);
      CHECK(m_sum_support(k, l, UnconditionalBody2D::box(1, 1), x) == doctest::Approx(k(x) + l(x)));
      CHECK(m_sum_support(k, l, disc, x) == doctest::Approx(std::sqrt(k(x) * k(x) + l(x) * l(x))));
      CHECK(m_sum_support(k, l, UnconditionalBody2D::origin(), x) == 0.0);
    }
    CHECK_THROWS_WITH(UnconditionalBody2D::custom([](double s, double t) { return std::abs(s) + t; }),
                      "M is not 1-unconditional");
    const UnconditionalBody2D ok = UnconditionalBody2D::custom([](double s, double t) { return std::max(std::abs(s), 2 * std::abs(t)); });
    CHECK(ok.support(-1, 1) == 2.0);
  }

  TEST_CASE("oracles are homogeneous and subadditive") {
    random::Rng rng(4);
    const ConvexBodyOracle k = ConvexBodyOracle::from_polytope(random::symmetric_polytope(rng));
    const ConvexBodyOracle l = random::zonotope(rng, 3, 6).oracle();
    for (const ConvexBodyOracle& h : {lp_sum(k, l, 3.0), m_sum(k, l, UnconditionalBody2D::lp_ball(1.5)), k, l}) {
      std::uniform_real_distribution<double> r(0.0, 5.0);
      for (int i = 0; i < 300; ++i) {
        const Vec x = random::direction(rng, 3) * r(rng);
        const Vec y = random::direction(rng, 3) * r(rng);
        const double t = r(rng);
        CHECK(std::abs(h(t * x) - t * h(x)) < 1e-10);
        CHECK(h(x + y) <= h(x) + h(y) + 1e-10);
      }
    }
  }

  TEST_CASE("Hausdorff distance") {
    const ConvexBodyOracle one = ConvexBodyOracle::from_polytope(shapes::cube(3, 1.0));
    const ConvexBodyOracle two = ConvexBodyOracle::from_polytope(shapes::cube(3, 2.0));
    CHECK(hausdorff_distance(one, one).value == 0.0);
    // h_2 - h_1 = |u|_1 / 2, maximal at (1, 1, 1) / sqrt 3.
    const HausdorffResult r = hausdorff_distance(one, two);
    const double exact = std::sqrt(3.0) / 2.0;
    CHECK(r.value <= exact + 1e-15);
    CHECK(r.value >= exact - r.error_bound);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-4));
    CHECK(r.error_bound < 0.1);

    const ConvexBodyOracle grown(3, [&](const Vec& x) { return one(x) + 0.125 * x.norm(); }, 2.0);
    CHECK(hausdorff_distance(one, grown).value == doctest::Approx(0.125).epsilon(1e-14));

    random::Rng rng(6);
    for (int t = 0; t < 10; ++t) {
      const ConvexBodyOracle a = ConvexBodyOracle::from_polytope(random::polytope(rng));
      const ConvexBodyOracle b = ConvexBodyOracle::from_polytope(random::polytope(rng));
      const ConvexBodyOracle c = ConvexBodyOracle::from_polytope(random::polytope(rng));
      const HausdorffResult ab = hausdorff_distance(a, b, 4), bc = hausdorff_distance(b, c, 4),
                            ac = hausdorff_distance(a, c, 4);
      CHECK(ac.value <= ab.value + bc.value + 2.0 * std::max({ab.error_bound, bc.error_bound, ac.error_bound}));
    }
  }

  TEST_CASE("mixed volume of a body and a polytope") {
    const Polytope cube = shapes::cube(3, 1.0);
    CHECK(mixed_volume_1(ConvexBodyOracle::from_polytope(cube), cube) == doctest::Approx(3.0));
    CHECK(mixed_volume_1(ConvexBodyOracle::point(3), cube) == 0.0);

    const Polytope big = shapes::cube(3, 2.0);
    const Polytope oct = shapes::cross_polytope(3);
    const double mv = mixed_volume_1(ConvexBodyOracle::from_polytope(big), oct);
    CHECK(mv == doctest::Approx(12.0).epsilon(1e-14));
    // V(L + tK) = V(L) + a1 t + a2 t^2 + V(K) t^3 with a1 = n V(K; L, L).
    const double v1 = minkowski_sum(oct, big).volume();
    const double v2 = minkowski_sum(oct, apply_linear(LinearMap::scaling(3, 2.0), big)).volume();
    const double c1 = v1 - oct.volume() - big.volume();
    const double c2 = v2 - oct.volume() - 8.0 * big.volume();
    const double a1 = 2.0 * c1 - c2 / 2.0;
    CHECK(a1 == doctest::Approx(mv).epsilon(1e-12));

    random::Rng rng(8);
    for (int t = 0; t < 10; ++t) {
      const Polytope p = random::polytope(rng);
      CHECK(mixed_volume_1(ConvexBodyOracle::from_polytope(p), p) == doctest::Approx(3.0 * p.volume()).epsilon(1e-9));
    }
  }

  TEST_CASE("linear maps act on bodies and measures") {
    const Polytope cube = shapes::cube(3, 1.0);
    const Polytope same = apply_linear(LinearMap::identity(3), cube);
    CHECK(same.vertices() == cube.vertices());
    const Polytope rot = apply_linear(LinearMap::rotation_x1x2(3, std::numbers::pi / 4), cube);
    CHECK(rot.support(v3(1, 0, 0)) == doctest::Approx(std::sqrt(0.5)));
    CHECK(rot.support(v3(1, 1, 0) / std::sqrt(2.0)) == doctest::Approx(0.5));
    CHECK(rot.volume() == doctest::Approx(1.0));

    const DiscreteSphericalMeasure mu = surface_area_measure(cube);
    CHECK(atom_discrepancy(pushforward_measure(LinearMap::identity(3), mu), mu) < 1e-15);
    const DiscreteSphericalMeasure stretched = pushforward_measure(LinearMap::diagonal(v3(2, 1, 1)), mu);
    CHECK(weight_at(stretched, v3(1, 0, 0)) == doctest::Approx(1.0));
    CHECK(weight_at(stretched, v3(0, -1, 0)) == doctest::Approx(2.0));
    CHECK(weight_at(stretched, v3(0, 0, 1)) == doctest::Approx(2.0));

    random::Rng rng(10);
    for (int t = 0; t < 10; ++t) {
      const Polytope p = random::polytope(rng);
      const LinearMap phi = random::linear_map(rng, 3, 10.0);
      const DiscreteSphericalMeasure direct = surface_area_measure(apply_linear(phi, p));
      CHECK(atom_discrepancy(pushforward_measure(phi, surface_area_measure(p)), direct) < 1e-8);
      const LinearMap q = LinearMap::rotation_x1x2(3, 0.3 * t + 0.1);
      const DiscreteSphericalMeasure turned = pushforward_measure(q, surface_area_measure(p));
      CHECK(turned.total_mass() == doctest::Approx(p.surface_area()).epsilon(1e-14));
    }
    CHECK_THROWS_AS(pushforward_measure(LinearMap::identity(3), DiscreteSphericalMeasure(3, {{v3(1, 0, 0), 1.0}})),
                    InvalidMeasure);
  }

  TEST_CASE("outer approximation contains the body") {
    const ConvexBodyOracle ball = ConvexBodyOracle::ball(3, 2.0);
    const Polytope outer = outer_approximation(ball, 3);
    CHECK(outer.volume() > 4.0 / 3.0 * std::numbers::pi * 8.0);
    CHECK(outer.volume() < 1.01 * 4.0 / 3.0 * std::numbers::pi * 8.0);
    random::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
      const Vec u = random::direction(rng, 3);
      CHECK(outer.support(u) >= 2.0 - 1e-12);
    }
  }
}
