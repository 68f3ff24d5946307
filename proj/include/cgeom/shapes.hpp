#pragma once

#include <random>

#include "cgeom/measure.hpp"
#include "cgeom/polytope.hpp"
#include "cgeom/projection.hpp"
#include "cgeom/types.hpp"

namespace cgeom::shapes {

/// Axis-parallel box centered at the origin.
Polytope box(const Vec& halfwidths);
Polytope cube(int n, double side);
/// Box rotated by `angle` in the {x1, x2}-plane.
Polytope rotated_box(const Vec& halfwidths, double angle);
/// conv{+-e_i}.
Polytope cross_polytope(int n);
/// conv{o, e_1, ..., e_n}.
Polytope standard_simplex(int n);
/// Polytope inscribed in the radius-r ball: icosphere vertices at the given
/// depth for n = 3 (depth 1: 80 triangular facets), a regular polygon for n = 2.
Polytope ball_approx(int n, double radius, int depth = 1);

}  // namespace cgeom::shapes

namespace cgeom::random {

using Rng = std::mt19937_64;

Vec direction(Rng& rng, int n);
/// Recentered hull of random points near the unit sphere in R^3 with a facet
/// count in [min_facets, max_facets] and no sliver facets.
Polytope polytope(Rng& rng, int min_facets = 8, int max_facets = 30);
/// As polytope(), but the hull of a point set closed under negation.
Polytope symmetric_polytope(Rng& rng, int min_facets = 8, int max_facets = 30);
/// Full-dimensional zonotope with between n and max_generators generators.
Zonotope zonotope(Rng& rng, int n, int max_generators);
/// 1..max_atoms atoms at random directions with weights in [0.05, 1.5].
DiscreteSphericalMeasure measure(Rng& rng, int n, int max_atoms);
/// Invertible map with condition number at most max_condition.
LinearMap linear_map(Rng& rng, int n, double max_condition = 10.0);

}  // namespace cgeom::random
