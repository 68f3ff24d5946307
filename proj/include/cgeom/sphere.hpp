#pragma once

#include <cstddef>
#include <vector>

namespace cgeom {

/// Deterministic covering of the unit sphere: an icosphere for n = 3 and an
/// equiangular grid for n = 2. Every point of the sphere lies within
/// mesh_angle radians of some sample.
struct SphereSample {
  int dim = 0;
  std::size_t count = 0;
  std::vector<double> dirs;  ///< count * dim, one direction after another
  double mesh_angle = 0.0;
  /// Triangles of the icosphere (n = 3 only), as sample indices.
  std::vector<int> triangles;

  const double* dir(std::size_t i) const { return dirs.data() + i * dim; }
};

/// Sample at subdivision `depth` (n = 3: 10 * 4^depth + 2 points; n = 2:
/// 24 * 2^depth points). Cached and safe to call concurrently.
const SphereSample& sphere_sample(int dim, int depth);

}  // namespace cgeom
