#include "cgeom/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <limits>

namespace cgeom::simd::neon {
namespace {

inline float64x2_t dot2(const PointBlock& pts, const double* dir, std::size_t i) {
  float64x2_t s = vmulq_n_f64(vld1q_f64(pts.soa + i), dir[0]);
  for (int k = 1; k < pts.dim; ++k) {
    s = vaddq_f64(s, vmulq_n_f64(vld1q_f64(pts.soa + k * pts.stride + i), dir[k]));
  }
  return s;
}

inline double dot1(const PointBlock& pts, const double* dir, std::size_t i) {
  double s = pts.soa[i] * dir[0];
  for (int k = 1; k < pts.dim; ++k) s = s + pts.soa[k * pts.stride + i] * dir[k];
  return s;
}

}  // namespace

double max_dot(const PointBlock& pts, const double* dir) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (pts.count >= 2) {
    float64x2_t acc = vdupq_n_f64(best);
    for (; i + 2 <= pts.count; i += 2) acc = vmaxq_f64(acc, dot2(pts, dir, i));
    best = vmaxvq_f64(acc);
  }
  for (; i < pts.count; ++i) {
    const double s = dot1(pts, dir, i);
    if (s > best) best = s;
  }
  return best;
}

double sum_abs_dot(const PointBlock& pts, const double* dir) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= pts.count; i += 2) acc = vaddq_f64(acc, vabsq_f64(dot2(pts, dir, i)));
  double total = vaddvq_f64(acc);
  for (; i < pts.count; ++i) total += std::abs(dot1(pts, dir, i));
  return total;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vmaxq_f64(acc, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  double best = vmaxvq_f64(acc);
  for (; i < n; ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace cgeom::simd::neon

#endif
