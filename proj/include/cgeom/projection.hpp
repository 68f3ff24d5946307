#pragma once

#include <vector>

#include "cgeom/measure.hpp"
#include "cgeom/oracle.hpp"
#include "cgeom/polytope.hpp"
#include "cgeom/simd.hpp"
#include "cgeom/solver.hpp"

namespace cgeom {

/// Minkowski sum of segments [-v_i, v_i]; o-symmetric by construction.
class Zonotope {
 public:
  /// Generators must be nonzero and share one dimension.
  explicit Zonotope(std::vector<Vec> generators);

  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }

  /// sum_i |x . v_i|
  double support(const Vec& x) const;
  void support_many(const double* dirs, std::size_t count, double* out) const;
  simd::PointBlock block() const;
  /// sum_i |v_i|, a bound on |y| over the zonotope.
  double radius_bound() const;

  /// Generators span R^n.
  bool is_full_dimensional() const;
  Zonotope scaled(double r) const;
  Zonotope apply_linear(const LinearMap& phi) const;
  ConvexBodyOracle oracle() const;
  /// Vertex form (Minkowski sum of the segments); requires full dimension.
  Polytope to_polytope() const;

 private:
  int dim_;
  std::vector<Vec> generators_;
  std::vector<double> soa_;
};

/// Generator concatenation: the Minkowski sum.
Zonotope operator+(const Zonotope& y, const Zonotope& z);

/// Pi P: one generator (w_i / 2) u_i per atom (u_i, w_i) of S(P, .).
Zonotope projection_body(const Polytope& p);

/// Even measure mu with h_Z(x) = (1/2) sum |x . u| mu(u): atoms (+-v/|v|, |v|).
DiscreteSphericalMeasure generating_measure(const Zonotope& z);

/// The o-symmetric polytope K with Pi K = Z, symmetrized by averaging the
/// support numbers of opposite facets.
Polytope inverse_projection_body(const Zonotope& z, const SolverConfig& cfg = {});

struct TransformLawReport {
  double pit_discrepancy = 0.0;   ///< Pi(phi P) vs |det phi| phi^{-t} Pi P
  double pimt_discrepancy = 0.0;  ///< Pi^{-1}(phi Z) vs |det phi|^{1/(n-1)} phi^{-t} Pi^{-1} Z, Z = Pi P
  double tolerance = 1e-8;
  bool passed = false;
};

/// Evaluates both transform laws on the sphere sample of the given depth.
TransformLawReport check_transform_law(const LinearMap& phi, const Polytope& p, int depth = 4);

}  // namespace cgeom
