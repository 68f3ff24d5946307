#pragma once

// Reference Levy-Prokhorov computations by exhaustive subset enumeration.
// Only usable for a handful of atoms; shared by the unit and acceptance tests.

#include <algorithm>
#include <limits>
#include <vector>

#include "cgeom/measure.hpp"

namespace lp_oracle {

// max over subsets A of mu(A) - nu(A_eps), open chordal neighborhoods.
inline double brute_force_deficiency(const cgeom::DiscreteSphericalMeasure& mu,
                                     const cgeom::DiscreteSphericalMeasure& nu, double eps) {
  const auto& a = mu.atoms();
  const auto& b = nu.atoms();
  double best = 0.0;
  for (unsigned mask = 1; mask < (1u << a.size()); ++mask) {
    double inside = 0.0, near = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask >> i & 1u) inside += a[i].w;
    }
    for (const auto& atom : b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((mask >> i & 1u) && (a[i].u - atom.u).norm() < eps) {
          near += atom.w;
          break;
        }
      }
    }
    best = std::max(best, inside - near);
  }
  return best;
}

// Chordal distances between the two supports, sorted, with 0 prepended.
inline std::vector<double> breakpoints(const cgeom::DiscreteSphericalMeasure& mu,
                                       const cgeom::DiscreteSphericalMeasure& nu) {
  std::vector<double> d{0.0};
  for (const auto& x : mu.atoms()) {
    for (const auto& y : nu.atoms()) d.push_back((x.u - y.u).norm());
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Both deficiencies are constant on each interval (d_k, d_{k+1}], so the
// smallest feasible eps on that interval is max(d_k, deficiency there).
inline double brute_force_lp(const cgeom::DiscreteSphericalMeasure& mu,
                             const cgeom::DiscreteSphericalMeasure& nu) {
  const std::vector<double> d = breakpoints(mu, nu);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double lo = d[k];
    const double hi = k + 1 < d.size() ? d[k + 1] : std::numeric_limits<double>::infinity();
    if (!(hi > lo)) continue;
    const double probe = k + 1 < d.size() ? 0.5 * (lo + hi) : lo + 1.0;
    const double need =
        std::max(brute_force_deficiency(mu, nu, probe), brute_force_deficiency(nu, mu, probe));
    const double candidate = std::max(lo, need);
    if (candidate <= hi) best = std::min(best, candidate);
  }
  return best;
}

// Evenly spaced eps values in (0, 2.5] that stay clear of the breakpoints.
inline std::vector<double> eps_grid(const cgeom::DiscreteSphericalMeasure& mu,
                                    const cgeom::DiscreteSphericalMeasure& nu, int count) {
  const std::vector<double> d = breakpoints(mu, nu);
  std::vector<double> grid;
  for (int i = 1; i <= count; ++i) {
    const double eps = 2.5 * i / count;
    const bool clear = std::none_of(d.begin(), d.end(), [&](double x) { return std::abs(x - eps) < 1e-9; });
    if (clear) grid.push_back(eps);
  }
  return grid;
}

}  // namespace lp_oracle
