#include "cgeom/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

#define CGEOM_AVX2 __attribute__((target("avx2")))

namespace cgeom::simd::avx2 {
namespace {

CGEOM_AVX2 inline __m256d dot4(const PointBlock& pts, const double* dir, std::size_t i) {
  __m256d s = _mm256_mul_pd(_mm256_loadu_pd(pts.soa + i), _mm256_set1_pd(dir[0]));
  for (int k = 1; k < pts.dim; ++k) {
    const __m256d x = _mm256_loadu_pd(pts.soa + k * pts.stride + i);
    s = _mm256_add_pd(s, _mm256_mul_pd(x, _mm256_set1_pd(dir[k])));
  }
  return s;
}

inline double dot1(const PointBlock& pts, const double* dir, std::size_t i) {
  double s = pts.soa[i] * dir[0];
  for (int k = 1; k < pts.dim; ++k) s = s + pts.soa[k * pts.stride + i] * dir[k];
  return s;
}

CGEOM_AVX2 inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

CGEOM_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

CGEOM_AVX2 double max_dot(const PointBlock& pts, const double* dir) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (pts.count >= 4) {
    __m256d acc = _mm256_set1_pd(best);
    for (; i + 4 <= pts.count; i += 4) acc = _mm256_max_pd(acc, dot4(pts, dir, i));
    best = hmax(acc);
  }
  for (; i < pts.count; ++i) {
    const double s = dot1(pts, dir, i);
    if (s > best) best = s;
  }
  return best;
}

CGEOM_AVX2 double sum_abs_dot(const PointBlock& pts, const double* dir) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= pts.count; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, dot4(pts, dir, i)));
  }
  double total = hsum(acc);
  for (; i < pts.count; ++i) total += std::abs(dot1(pts, dir, i));
  return total;
}

CGEOM_AVX2 double max_abs_diff(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign, d));
  }
  double best = hmax(acc);
  for (; i < n; ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace cgeom::simd::avx2

#endif
