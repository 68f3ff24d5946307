#pragma once

#include <vector>

#include "cgeom/types.hpp"

namespace cgeom {

class LinearMap;

struct Atom {
  Vec u;           ///< unit direction
  double w = 0.0;  ///< positive weight
};

/// Finite positive measure on the unit sphere.
///
/// Construction normalizes directions, drops zero weights, merges atoms whose
/// directions lie within chordal distance kMergeTolerance, and sorts the atoms
/// lexicographically by direction, so equal measures compare atom by atom.
class DiscreteSphericalMeasure {
 public:
  static constexpr double kMergeTolerance = 1e-9;
  static constexpr double kCentroidTolerance = 1e-8;
  static constexpr double kSubsphereTolerance = 1e-8;

  explicit DiscreteSphericalMeasure(int dim = 3);
  DiscreteSphericalMeasure(int dim, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const;
  /// Sum of w_i u_i.
  Vec centroid() const;
  /// Smallest singular value of the matrix whose rows are the atom directions.
  double min_singular_value() const;
  /// Closed under u -> -u with weights equal within tol * max(1, w).
  bool is_even(double tol = 1e-9) const;

  /// Throws InvalidMeasure unless the measure is the surface area measure of
  /// some polytope: zero centroid (relative to total mass) and not
  /// concentrated on a great subsphere.
  void check_minkowski_conditions() const;

  DiscreteSphericalMeasure scaled(double factor) const;

 private:
  int dim_;
  std::vector<Atom> atoms_;
};

DiscreteSphericalMeasure add_measures(const DiscreteSphericalMeasure& mu,
                                      const DiscreteSphericalMeasure& nu);

/// Surface area measure of phi(P) given mu = S(P, .): atom (u, w) maps to
/// (phi^{-t}u / |phi^{-t}u|, |det phi| |phi^{-t}u| w).
DiscreteSphericalMeasure pushforward_measure(const LinearMap& phi,
                                             const DiscreteSphericalMeasure& mu);

/// Largest weight difference after pairing atoms whose directions lie within
/// `direction_tol`; an unpaired atom counts with its full weight.
double atom_discrepancy(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                        double direction_tol = 1e-7);

}  // namespace cgeom
