#pragma once

#include "cgeom/measure.hpp"
#include "cgeom/polytope.hpp"

namespace cgeom {

struct SolverConfig {
  double area_tolerance = 1e-9;  ///< relative, per facet
  int max_iterations = 200;
  double line_search_shrink = 0.5;

  void validate() const;
};

struct SolverReport {
  int iterations = 0;
  double residual = 0.0;  ///< max_i |area_i - w_i| / w_i of the returned polytope
};

/// Polytope with centroid at the origin whose surface area measure is `mu`.
///
/// n = 3: maximizes log V(h) - (n / W) sum w_i h_i over support numbers h
/// (a concave function whose stationary point has areas proportional to the
/// weights) by damped Newton steps, then rescales so the total area is W.
/// n = 2: the polygon is assembled directly from its edge vectors.
///
/// Throws InvalidMeasure for inadmissible measures and SolverStalled if the
/// area residual does not drop below the tolerance.
Polytope solve_minkowski(const DiscreteSphericalMeasure& mu, const SolverConfig& cfg = {},
                         SolverReport* report = nullptr);

/// The polytope with centroid at the origin and S = S(K, .) + S(L, .).
Polytope blaschke_sum(const Polytope& k, const Polytope& l, const SolverConfig& cfg = {});

/// Dilation a K, a > 0.
Polytope scale_body(double a, const Polytope& k);

}  // namespace cgeom
