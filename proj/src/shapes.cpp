#include "cgeom/shapes.hpp"

#include <algorithm>
#include <cmath>

#include "cgeom/sphere.hpp"

namespace cgeom::shapes {

Polytope box(const Vec& halfwidths) {
  const int n = static_cast<int>(halfwidths.size());
  if (!(halfwidths.minCoeff() > 0.0)) throw DegenerateBody();
  std::vector<Vec> corners;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec c(n);
    for (int k = 0; k < n; ++k) c[k] = (mask >> k & 1) ? halfwidths[k] : -halfwidths[k];
    corners.push_back(std::move(c));
  }
  return Polytope::from_vertices(corners);
}

Polytope cube(int n, double side) { return box(Vec::Constant(n, side / 2.0)); }

Polytope rotated_box(const Vec& halfwidths, double angle) {
  return apply_linear(LinearMap::rotation_x1x2(static_cast<int>(halfwidths.size()), angle),
                      box(halfwidths));
}

Polytope cross_polytope(int n) {
  std::vector<Vec> pts;
  for (int k = 0; k < n; ++k) {
    pts.push_back(Vec::Unit(n, k));
    pts.push_back(-Vec::Unit(n, k));
  }
  return Polytope::from_vertices(pts);
}

Polytope standard_simplex(int n) {
  std::vector<Vec> pts{Vec::Zero(n)};
  for (int k = 0; k < n; ++k) pts.push_back(Vec::Unit(n, k));
  return Polytope::from_vertices(pts);
}

Polytope ball_approx(int n, double radius, int depth) {
  if (!(radius > 0.0)) throw DegenerateBody();
  const SphereSample& s = sphere_sample(n, depth);
  std::vector<Vec> pts;
  pts.reserve(s.count);
  for (std::size_t i = 0; i < s.count; ++i) pts.push_back(radius * Eigen::Map<const Vec>(s.dir(i), n));
  return Polytope::from_vertices(pts);
}

}  // namespace cgeom::shapes

namespace cgeom::random {
namespace {

bool acceptable(const Polytope& p, int min_facets, int max_facets) {
  const int f = static_cast<int>(p.facets().size());
  if (f < min_facets || f > max_facets) return false;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const Facet& facet : p.facets()) {
    lo = std::min(lo, facet.area);
    hi = std::max(hi, facet.area);
  }
  return lo > 1e-3 * hi;
}

Vec near_sphere(Rng& rng, int n) {
  std::uniform_real_distribution<double> radius(0.8, 1.2);
  return radius(rng) * direction(rng, n);
}

}  // namespace

Vec direction(Rng& rng, int n) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Vec v(n);
    for (int k = 0; k < n; ++k) v[k] = gauss(rng);
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

Polytope polytope(Rng& rng, int min_facets, int max_facets) {
  // A simplicial hull of k points has 2k - 4 facets.
  std::uniform_int_distribution<int> count(std::max(4, (min_facets + 4 + 1) / 2), std::max(4, (max_facets + 4) / 2));
  for (;;) {
    const int k = count(rng);
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i) pts.push_back(near_sphere(rng, 3));
    try {
      Polytope p = Polytope::from_vertices(pts);
      if (acceptable(p, min_facets, max_facets)) return recenter(p);
    } catch (const DegenerateBody&) {
    }
  }
}

Polytope symmetric_polytope(Rng& rng, int min_facets, int max_facets) {
  // k antipodal pairs give about 4k - 4 facets.
  std::uniform_int_distribution<int> count(std::max(3, (min_facets + 4 + 3) / 4), std::max(3, (max_facets + 4) / 4));
  for (;;) {
    const int k = count(rng);
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i) {
      const Vec v = near_sphere(rng, 3);
      pts.push_back(v);
      pts.push_back(-v);
    }
    try {
      Polytope p = Polytope::from_vertices(pts);
      if (acceptable(p, min_facets, max_facets)) return p;
    } catch (const DegenerateBody&) {
    }
  }
}

Zonotope zonotope(Rng& rng, int n, int max_generators) {
  std::uniform_int_distribution<int> count(n, std::max(n, max_generators));
  std::uniform_real_distribution<double> length(0.2, 1.0);
  for (;;) {
    std::vector<Vec> gens;
    const int g = count(rng);
    for (int i = 0; i < g; ++i) gens.push_back(length(rng) * direction(rng, n));
    Zonotope z(std::move(gens));
    if (z.is_full_dimensional()) return z;
  }
}

DiscreteSphericalMeasure measure(Rng& rng, int n, int max_atoms) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_atoms));
  std::uniform_real_distribution<double> weight(0.05, 1.5);
  std::vector<Atom> atoms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Vec u = direction(rng, n);
    atoms.push_back({std::move(u), weight(rng)});
  }
  return DiscreteSphericalMeasure(n, std::move(atoms));
}

LinearMap linear_map(Rng& rng, int n, double max_condition) {
  if (!(max_condition >= 1.0)) throw GeometryError("condition bound must be at least 1");
  std::normal_distribution<double> gauss;
  auto orthogonal = [&] {
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    }
    return Mat(Eigen::HouseholderQR<Mat>(g).householderQ());
  };
  std::uniform_real_distribution<double> log_sv(0.0, std::log(max_condition));
  std::uniform_real_distribution<double> overall(-0.5, 0.5);
  // Singular values within a factor max_condition of each other.
  const double base = std::exp(overall(rng));
  Vec s(n);
  for (int k = 0; k < n; ++k) s[k] = base * std::exp(log_sv(rng));
  const Mat left = orthogonal();
  const Mat right = orthogonal();
  return LinearMap(left * s.asDiagonal() * right);
}

}  // namespace cgeom::random
