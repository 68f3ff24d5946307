#pragma once

#include <functional>
#include <string>

#include "cgeom/polytope.hpp"
#include "cgeom/types.hpp"

namespace cgeom {

/// Convex body given only through its support function.
class ConvexBodyOracle {
 public:
  using SupportFn = std::function<double(const Vec&)>;
  /// Optional batch path: support values for `count` contiguous directions.
  using BatchFn = std::function<void(const double* dirs, std::size_t count, double* out)>;

  /// `radius_bound` must bound |y| over the body (used in error bounds).
  ConvexBodyOracle(int dim, SupportFn support, double radius_bound, BatchFn batch = {});

  static ConvexBodyOracle from_polytope(const Polytope& p);
  /// The singleton {o}.
  static ConvexBodyOracle point(int dim);
  static ConvexBodyOracle ball(int dim, double radius);

  int dim() const { return dim_; }
  double radius_bound() const { return radius_bound_; }
  double support(const Vec& x) const { return support_(x); }
  double operator()(const Vec& x) const { return support_(x); }
  void support_many(const double* dirs, std::size_t count, double* out) const;

 private:
  int dim_;
  SupportFn support_;
  double radius_bound_;
  BatchFn batch_;
};

/// Planar convex body symmetric in both coordinate axes, given by its support
/// function on R^2.
class UnconditionalBody2D {
 public:
  using SupportFn = std::function<double(double, double)>;

  /// [-a, a] x [-b, b]: h(s, t) = a|s| + b|t|.
  static UnconditionalBody2D box(double a, double b);
  /// Radius-r unit ball of the l^p norm, 1 <= p <= infinity.
  static UnconditionalBody2D lp_ball(double p, double radius = 1.0);
  static UnconditionalBody2D disc(double radius = 1.0) { return lp_ball(2.0, radius); }
  static UnconditionalBody2D origin();
  /// Arbitrary support function; rejected unless h(+-s, +-t) agree within
  /// 1e-10 on a fixed sample of (s, t).
  static UnconditionalBody2D custom(SupportFn support, std::string name = "custom");

  double support(double s, double t) const { return support_(s, t); }
  const std::string& name() const { return name_; }

 private:
  UnconditionalBody2D(SupportFn support, std::string name)
      : support_(std::move(support)), name_(std::move(name)) {}

  SupportFn support_;
  std::string name_;
};

/// (h_K(x)^p + h_L(x)^p)^{1/p}, or max(h_K(x), h_L(x)) for p = infinity.
double lp_sum_support(const ConvexBodyOracle& k, const ConvexBodyOracle& l, double p,
                      const Vec& x);
ConvexBodyOracle lp_sum(const ConvexBodyOracle& k, const ConvexBodyOracle& l, double p);

/// h_M(h_K(x), h_L(x)).
double m_sum_support(const ConvexBodyOracle& k, const ConvexBodyOracle& l,
                     const UnconditionalBody2D& m, const Vec& x);
ConvexBodyOracle m_sum(const ConvexBodyOracle& k, const ConvexBodyOracle& l,
                       const UnconditionalBody2D& m);

/// Sum over facets of L of h_K(normal) * area: n V(K; L, ..., L).
double mixed_volume_1(const ConvexBodyOracle& k, const Polytope& l);

/// Intersection of the supporting halfspaces of K at the sphere sample of
/// the given depth. Requires the origin in the interior of K.
Polytope outer_approximation(const ConvexBodyOracle& k, int depth = 3);

struct HausdorffResult {
  double value = 0.0;        ///< max |h_K - h_L| over the sample
  double error_bound = 0.0;  ///< the true distance is at most value + error_bound
};

HausdorffResult hausdorff_distance(const ConvexBodyOracle& k, const ConvexBodyOracle& l,
                                   int depth = 6);

}  // namespace cgeom
