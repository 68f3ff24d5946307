#include <atomic>
#include <cstdlib>
#include <string_view>

#include "cgeom/simd.hpp"

namespace cgeom::simd {
namespace {

struct KernelTable {
  Backend backend;
  double (*max_dot)(const PointBlock&, const double*);
  double (*sum_abs_dot)(const PointBlock&, const double*);
  double (*max_abs_diff)(const double*, const double*, std::size_t);
};

constexpr KernelTable kScalarTable{Backend::kScalar, &scalar::max_dot, &scalar::sum_abs_dot,
                                   &scalar::max_abs_diff};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2Table{Backend::kAvx2, &avx2::max_dot, &avx2::sum_abs_dot,
                                 &avx2::max_abs_diff};
#endif
#if defined(__aarch64__)
constexpr KernelTable kNeonTable{Backend::kNeon, &neon::max_dot, &neon::sum_abs_dot,
                                 &neon::max_abs_diff};
#endif

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return &kScalarTable;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (__builtin_cpu_supports("avx2")) return &kAvx2Table;
#endif
      return nullptr;
    case Backend::kNeon:
#if defined(__aarch64__)
      return &kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("CGEOM_SIMD"); env && std::string_view(env) == "scalar") {
    return &kScalarTable;
  }
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (const KernelTable* t = table_for(b)) return t;
  }
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

const KernelTable& kernels() { return *current().load(std::memory_order_relaxed); }

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool is_supported(Backend b) { return table_for(b) != nullptr; }

Backend active_backend() { return kernels().backend; }

bool set_backend(Backend b) {
  const KernelTable* t = table_for(b);
  if (!t) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

double max_dot(const PointBlock& pts, const double* dir) { return kernels().max_dot(pts, dir); }

double sum_abs_dot(const PointBlock& pts, const double* dir) {
  return kernels().sum_abs_dot(pts, dir);
}

void max_dot_many(const PointBlock& pts, const double* dirs, std::size_t ndirs, double* out) {
  const KernelTable& k = kernels();
  for (std::size_t j = 0; j < ndirs; ++j) out[j] = k.max_dot(pts, dirs + j * pts.dim);
}

void sum_abs_dot_many(const PointBlock& pts, const double* dirs, std::size_t ndirs, double* out) {
  const KernelTable& k = kernels();
  for (std::size_t j = 0; j < ndirs; ++j) out[j] = k.sum_abs_dot(pts, dirs + j * pts.dim);
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  return kernels().max_abs_diff(a, b, n);
}

}  // namespace cgeom::simd
