#include "cgeom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "cgeom/sphere.hpp"

namespace cgeom {

ConvexBodyOracle::ConvexBodyOracle(int dim, SupportFn support, double radius_bound, BatchFn batch)
    : dim_(dim), support_(std::move(support)), radius_bound_(radius_bound), batch_(std::move(batch)) {
  if (dim < 1) throw GeometryError("oracle dimension must be positive");
  if (!support_) throw GeometryError("oracle needs a support function");
  if (!(radius_bound >= 0.0)) throw GeometryError("radius bound must be nonnegative");
}

ConvexBodyOracle ConvexBodyOracle::from_polytope(const Polytope& p) {
  auto shared = std::make_shared<const Polytope>(p);
  return ConvexBodyOracle(
      p.dim(), [shared](const Vec& x) { return shared->support(x); }, p.circumradius(),
      [shared](const double* dirs, std::size_t count, double* out) {
        shared->support_many(dirs, count, out);
      });
}

ConvexBodyOracle ConvexBodyOracle::point(int dim) {
  return ConvexBodyOracle(dim, [](const Vec&) { return 0.0; }, 0.0);
}

ConvexBodyOracle ConvexBodyOracle::ball(int dim, double radius) {
  if (!(radius >= 0.0)) throw GeometryError("ball radius must be nonnegative");
  return ConvexBodyOracle(dim, [radius](const Vec& x) { return radius * x.norm(); }, radius);
}

void ConvexBodyOracle::support_many(const double* dirs, std::size_t count, double* out) const {
  if (batch_) {
    batch_(dirs, count, out);
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = support_(Eigen::Map<const Vec>(dirs + i * dim_, dim_));
  }
}

UnconditionalBody2D UnconditionalBody2D::box(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw GeometryError("box half-widths must be nonnegative");
  return UnconditionalBody2D([a, b](double s, double t) { return a * std::abs(s) + b * std::abs(t); },
                             "box");
}

UnconditionalBody2D UnconditionalBody2D::lp_ball(double p, double radius) {
  if (!(p >= 1.0)) throw GeometryError("l^p ball needs p >= 1");
  if (!(radius >= 0.0)) throw GeometryError("radius must be nonnegative");
  if (p == 1.0) {
    return UnconditionalBody2D(
        [radius](double s, double t) { return radius * std::max(std::abs(s), std::abs(t)); }, "l1-ball");
  }
  if (std::isinf(p)) {
    return UnconditionalBody2D(
        [radius](double s, double t) { return radius * (std::abs(s) + std::abs(t)); }, "linf-ball");
  }
  if (p == 2.0) {
    return UnconditionalBody2D([radius](double s, double t) { return radius * std::hypot(s, t); },
                               "disc");
  }
  // Support function of the l^p ball is the dual l^q norm.
  const double q = p / (p - 1.0);
  return UnconditionalBody2D(
      [radius, q](double s, double t) {
        const double m = std::max(std::abs(s), std::abs(t));
        if (m == 0.0) return 0.0;
        return radius * m *
               std::pow(std::pow(std::abs(s) / m, q) + std::pow(std::abs(t) / m, q), 1.0 / q);
      },
      "lp-ball");
}

UnconditionalBody2D UnconditionalBody2D::origin() {
  return UnconditionalBody2D([](double, double) { return 0.0; }, "origin");
}

UnconditionalBody2D UnconditionalBody2D::custom(SupportFn support, std::string name) {
  if (!support) throw GeometryError("M needs a support function");
  const double samples[][2] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.3, 1.7},
                               {2.0, 0.5}, {1.25, 3.5}, {0.1, 0.01}, {5.0, 2.0}};
  for (const auto& st : samples) {
    const double ref = support(st[0], st[1]);
    for (double sx : {-1.0, 1.0}) {
      for (double sy : {-1.0, 1.0}) {
        if (std::abs(support(sx * st[0], sy * st[1]) - ref) > 1e-10 * std::max(1.0, std::abs(ref))) {
          throw GeometryError("M is not 1-unconditional");
        }
      }
    }
  }
  return UnconditionalBody2D(std::move(support), std::move(name));
}

namespace {

double nonnegative_support(double h) {
  if (h < -1e-12) throw GeometryError("body does not contain origin");
  return std::max(h, 0.0);
}

}  // namespace

double lp_sum_support(const ConvexBodyOracle& k, const ConvexBodyOracle& l, double p,
                      const Vec& x) {
  if (!(p > 1.0)) throw GeometryError("Lp addition needs p > 1");
  const double a = nonnegative_support(k.support(x));
  const double b = nonnegative_support(l.support(x));
  if (std::isinf(p)) return std::max(a, b);
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

ConvexBodyOracle lp_sum(const ConvexBodyOracle& k, const ConvexBodyOracle& l, double p) {
  if (k.dim() != l.dim()) throw GeometryError("dimension mismatch");
  if (!(p > 1.0)) throw GeometryError("Lp addition needs p > 1");
  return ConvexBodyOracle(
      k.dim(), [k, l, p](const Vec& x) { return lp_sum_support(k, l, p, x); },
      k.radius_bound() + l.radius_bound());
}

double m_sum_support(const ConvexBodyOracle& k, const ConvexBodyOracle& l,
                     const UnconditionalBody2D& m, const Vec& x) {
  return m.support(k.support(x), l.support(x));
}

ConvexBodyOracle m_sum(const ConvexBodyOracle& k, const ConvexBodyOracle& l,
                       const UnconditionalBody2D& m) {
  if (k.dim() != l.dim()) throw GeometryError("dimension mismatch");
  // h_M is nondecreasing in |s| and |t|, so h_M(R_K, R_L) bounds the radius.
  return ConvexBodyOracle(
      k.dim(), [k, l, m](const Vec& x) { return m_sum_support(k, l, m, x); },
      m.support(k.radius_bound(), l.radius_bound()));
}

double mixed_volume_1(const ConvexBodyOracle& k, const Polytope& l) {
  if (k.dim() != l.dim()) throw GeometryError("dimension mismatch");
  double total = 0.0;
  for (const Facet& f : l.facets()) total += k.support(f.normal) * f.area;
  return total;
}

Polytope outer_approximation(const ConvexBodyOracle& k, int depth) {
  const SphereSample& s = sphere_sample(k.dim(), depth);
  std::vector<double> h(s.count);
  k.support_many(s.dirs.data(), s.count, h.data());
  std::vector<Vec> normals;
  normals.reserve(s.count);
  Vec offsets(static_cast<Eigen::Index>(s.count));
  for (std::size_t i = 0; i < s.count; ++i) {
    if (!(h[i] > 0.0)) throw DegenerateBody("origin is not interior to the body");
    normals.push_back(Eigen::Map<const Vec>(s.dir(i), k.dim()));
    offsets[static_cast<Eigen::Index>(i)] = h[i];
  }
  return Polytope::from_halfspaces(normals, offsets);
}

HausdorffResult hausdorff_distance(const ConvexBodyOracle& k, const ConvexBodyOracle& l,
                                   int depth) {
  if (k.dim() != l.dim()) throw GeometryError("dimension mismatch");
  const SphereSample& s = sphere_sample(k.dim(), depth);
  std::vector<double> hk(s.count), hl(s.count);
  k.support_many(s.dirs.data(), s.count, hk.data());
  l.support_many(s.dirs.data(), s.count, hl.data());
  HausdorffResult r;
  r.value = simd::max_abs_diff(hk.data(), hl.data(), s.count);
  // |h_K - h_L| is Lipschitz on the sphere with constant R_K + R_L, and chords
  // are shorter than arcs.
  r.error_bound = (k.radius_bound() + l.radius_bound()) * s.mesh_angle;
  return r;
}

}  // namespace cgeom
