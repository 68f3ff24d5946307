#include <cmath>
#include <limits>

#include "cgeom/simd.hpp"

namespace cgeom::simd::scalar {

// Dot products accumulate coordinate by coordinate in index order; the vector
// kernels use the same order per lane so max_dot agrees bit for bit.

double max_dot(const PointBlock& pts, const double* dir) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.count; ++i) {
    double s = pts.soa[i] * dir[0];
    for (int k = 1; k < pts.dim; ++k) s = s + pts.soa[k * pts.stride + i] * dir[k];
    if (s > best) best = s;
  }
  return best;
}

double sum_abs_dot(const PointBlock& pts, const double* dir) {
  double total = 0.0;
  for (std::size_t i = 0; i < pts.count; ++i) {
    double s = pts.soa[i] * dir[0];
    for (int k = 1; k < pts.dim; ++k) s = s + pts.soa[k * pts.stride + i] * dir[k];
    total += std::abs(s);
  }
  return total;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace cgeom::simd::scalar
