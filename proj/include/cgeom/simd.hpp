#pragma once

// Data-parallel kernels behind support-function evaluation.
//
// Every kernel has a portable scalar reference in cgeom::simd::scalar and, where
// the target allows, a vectorized variant (AVX2 on x86-64, NEON on AArch64).
// The dispatching entry points in cgeom::simd pick the best supported variant
// once at startup; CGEOM_SIMD=scalar in the environment forces the reference.

#include <cstddef>

namespace cgeom::simd {

enum class Backend { kScalar, kAvx2, kNeon };

const char* backend_name(Backend b);
bool is_supported(Backend b);
Backend active_backend();
/// Switches dispatch to `b`. Returns false (dispatch unchanged) when unsupported.
bool set_backend(Backend b);

/// Points in structure-of-arrays layout: coordinate k of point i is
/// soa[k * stride + i], for k < dim and i < count.
struct PointBlock {
  const double* soa = nullptr;
  std::size_t count = 0;
  std::size_t stride = 0;
  int dim = 0;
};

/// max_i <p_i, dir>; -infinity for an empty block.
double max_dot(const PointBlock& pts, const double* dir);
/// sum_i |<p_i, dir>|.
double sum_abs_dot(const PointBlock& pts, const double* dir);
/// max_dot for each of `ndirs` directions stored contiguously (dim doubles each).
void max_dot_many(const PointBlock& pts, const double* dirs, std::size_t ndirs, double* out);
void sum_abs_dot_many(const PointBlock& pts, const double* dirs, std::size_t ndirs, double* out);
/// max_i |a_i - b_i|; 0 for n == 0.
double max_abs_diff(const double* a, const double* b, std::size_t n);

#define CGEOM_SIMD_KERNEL_DECLS                                                  \
  double max_dot(const PointBlock& pts, const double* dir);                      \
  double sum_abs_dot(const PointBlock& pts, const double* dir);                  \
  double max_abs_diff(const double* a, const double* b, std::size_t n);

namespace scalar {
CGEOM_SIMD_KERNEL_DECLS
}
#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
CGEOM_SIMD_KERNEL_DECLS
}
#endif
#if defined(__aarch64__)
namespace neon {
CGEOM_SIMD_KERNEL_DECLS
}
#endif

#undef CGEOM_SIMD_KERNEL_DECLS

}  // namespace cgeom::simd
