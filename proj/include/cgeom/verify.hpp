#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgeom/oracle.hpp"
#include "cgeom/polytope.hpp"
#include "cgeom/projection.hpp"
#include "cgeom/shapes.hpp"
#include "cgeom/solver.hpp"

namespace cgeom::verify {

using json = nlohmann::json;

/// Outcome of one check. For bound checks `measured` is the worst discrepancy
/// (passed when it stays within `tolerance`); for counterexample checks it is
/// the witnessed violation, which must exceed the stated margin.
struct CheckReport {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  json metrics = json::object();
  json witness;  ///< serialized inputs of the worst instance, null if none
};

json to_json(const CheckReport& r);

/// Pi(P # Q) against Pi P + Pi Q, compared through generating measures and
/// sampled support functions.
CheckReport check_projection_additivity(const Polytope& p, const Polytope& q,
                                        const SolverConfig& cfg = {});

/// |delta_bar_LP(Pi K, Pi L) - delta_LP(K, L)| < 2 tol. K and L must be
/// o-symmetric.
CheckReport check_isometry(const Polytope& k, const Polytope& l, double tol = 1e-9);

/// delta_LP(K1 # L1, K2 # L2) <= 2 max(delta_LP(K1, K2), delta_LP(L1, L2)) + 3 tol.
/// `measured` is the slack of the inequality.
CheckReport check_blaschke_lipschitz(const Polytope& k1, const Polytope& l1, const Polytope& k2,
                                     const Polytope& l2, double tol = 1e-9);

/// Sampled Hausdorff distance between phi(K # L) and phi K # phi L.
CheckReport check_gl_covariance_blaschke(const Polytope& k, const Polytope& l,
                                         const LinearMap& phi);

/// The unit cube K, its quarter-turn rotation L about x3 and M = conv(K u L):
/// K # L is taller than M # M.
CheckReport check_not_monotone();

/// Minimum Hlawka slack of h_Z over `trials` random triples.
CheckReport check_hlawka(const Zonotope& z, int trials, std::uint64_t seed);

/// Residuals of the three functional equations a support function h_M must
/// satisfy for the M-sum to map zonoids to zonoids, plus the Hlawka slacks of
/// the two test configurations they come from. Passes when M is a box.
CheckReport check_msum_constraints(const UnconditionalBody2D& m);

/// Operation K * L = F^{-1}(F K + F L) with F rotating a body in the
/// {x1, x2}-plane by its volume. For the unit cube the result is [-1, 1]^3
/// rotated by -7, far from every dilate of the cube.
CheckReport check_rotation_counterexample_minkowski();

/// As above with Blaschke addition and rotation by surface area: the result
/// is the sqrt(2)-cube rotated by -6. Also checks delta_LP(F K, F L) <=
/// 4 delta_LP(K, L) on `pairs` random o-symmetric pairs.
CheckReport check_rotation_counterexample_blaschke(int pairs, std::uint64_t seed,
                                                   double tol = 1e-9);

/// delta_LP(K # sB, K) and the Hausdorff distance shrink as s decreases.
/// `s_values` must be decreasing.
CheckReport check_limit_identity(const Polytope& k, const std::vector<double>& s_values,
                                 double tol = 1e-9);

/// Pi(aK # bL) = a^{n-1} Pi K + b^{n-1} Pi L through generating measures.
CheckReport check_scaled_blaschke_family(const Polytope& k, const Polytope& l, double a,
                                         double b, const SolverConfig& cfg = {});

CheckReport check_transform_law_report(const LinearMap& phi, const Polytope& p);

/// K_m: the cube [-1/4, 1/4]^3 with the areas of the two x1-facets scaled by
/// 1 + 1/m. Both distances to K must decrease below `threshold` by the last m,
/// and whenever one is below the threshold the other is below 10x it. `tol`
/// is the bisection tolerance of delta_LP.
CheckReport check_metric_equivalence(const std::vector<int>& m_values, double threshold = 1e-3,
                                     double tol = 1e-9);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::string filter;  ///< substring of check names; empty runs everything
  double tol = 1e-9;   ///< bisection tolerance of the metric checks
};

std::vector<std::string> suite_check_names();
std::vector<CheckReport> run_suite(const SuiteOptions& options);

}  // namespace cgeom::verify
