#pragma once

#include <cstdint>
#include <vector>

#include "cgeom/measure.hpp"
#include "cgeom/polytope.hpp"
#include "cgeom/projection.hpp"

namespace cgeom {

/// Dinic max-flow on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);
  void add_edge(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);

 private:
  struct Edge {
    int to;
    std::int64_t cap;
  };
  bool bfs(int source, int sink);
  std::int64_t dfs(int v, int sink, std::int64_t pushed);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

/// max over sets A of mu(A) - nu(A_eps), A_eps the open chordal eps-neighborhood.
double lp_deficiency(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                     double eps);

/// Both Levy-Prokhorov inequalities hold at eps > 0.
bool lp_feasible(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                 double eps);

struct LpDistanceResult {
  double value = 0.0;
  double certificate_eps = 0.0;  ///< feasible; certificate_eps - 2 * tolerance is not
  double bisection_tolerance = 0.0;
};

/// Levy-Prokhorov distance by bisection on eps, accurate to `tol`.
LpDistanceResult lp_distance(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                             double tol = 1e-9);

/// Distance between the surface area measures of K and L.
double delta_lp(const Polytope& k, const Polytope& l, double tol = 1e-9);
/// Distance between the generating measures of Y and Z.
double delta_bar_lp(const Zonotope& y, const Zonotope& z, double tol = 1e-9);

}  // namespace cgeom
