#pragma once

#include <span>
#include <vector>

#include "cgeom/types.hpp"

namespace cgeom {

struct HullFacet {
  /// Extreme input points on this facet, counterclockwise seen from outside
  /// (in R^2: the two endpoints of the edge, in counterclockwise order).
  std::vector<int> cycle;
  Vec normal;  ///< outer unit normal
  double offset = 0.0;
};

struct Hull {
  int dim = 0;
  std::vector<int> vertices;  ///< sorted indices of the extreme input points
  std::vector<HullFacet> facets;
};

/// Convex hull of points in R^2 or R^3.
///
/// Orientation tests are exact. Adjacent hull triangles whose vertices lie
/// within merge_tolerance * diameter of a common plane are merged into one
/// facet, and points lying on fewer than `dim` merged facets are dropped as
/// non-extreme. Throws DegenerateBody when the points do not span R^dim.
Hull convex_hull(std::span<const Vec> points, double merge_tolerance = 1e-9);

}  // namespace cgeom
