#include "cgeom/projection.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "cgeom/sphere.hpp"

namespace cgeom {

Zonotope::Zonotope(std::vector<Vec> generators) : dim_(0), generators_(std::move(generators)) {
  if (generators_.empty()) throw GeometryError("zonotope needs at least one generator");
  dim_ = static_cast<int>(generators_[0].size());
  if (dim_ < 1) throw GeometryError("zonotope dimension must be positive");
  const std::size_t g = generators_.size();
  soa_.assign(g * static_cast<std::size_t>(dim_), 0.0);
  for (std::size_t i = 0; i < g; ++i) {
    const Vec& v = generators_[i];
    if (v.size() != dim_) throw GeometryError("generator dimension mismatch");
    if (!v.allFinite()) throw GeometryError("non-finite generator");
    if (!(v.norm() > 0.0)) throw GeometryError("zero generator");
    for (int k = 0; k < dim_; ++k) soa_[k * g + i] = v[k];
  }
}

simd::PointBlock Zonotope::block() const {
  return {soa_.data(), generators_.size(), generators_.size(), dim_};
}

double Zonotope::support(const Vec& x) const {
  if (x.size() != dim_) throw GeometryError("dimension mismatch");
  return simd::sum_abs_dot(block(), x.data());
}

void Zonotope::support_many(const double* dirs, std::size_t count, double* out) const {
  simd::sum_abs_dot_many(block(), dirs, count, out);
}

double Zonotope::radius_bound() const {
  double r = 0.0;
  for (const Vec& v : generators_) r += v.norm();
  return r;
}

bool Zonotope::is_full_dimensional() const {
  if (generators_.size() < static_cast<std::size_t>(dim_)) return false;
  Mat g(dim_, static_cast<Eigen::Index>(generators_.size()));
  for (std::size_t i = 0; i < generators_.size(); ++i) g.col(static_cast<Eigen::Index>(i)) = generators_[i];
  Eigen::JacobiSVD<Mat> svd(g);
  const Vec s = svd.singularValues();
  return s[dim_ - 1] > 1e-12 * s[0];
}

Zonotope Zonotope::scaled(double r) const {
  if (!(r > 0.0)) throw GeometryError("scale factor must be positive");
  std::vector<Vec> gens = generators_;
  for (Vec& v : gens) v *= r;
  return Zonotope(std::move(gens));
}

Zonotope Zonotope::apply_linear(const LinearMap& phi) const {
  if (phi.dim() != dim_) throw GeometryError("dimension mismatch");
  std::vector<Vec> gens;
  gens.reserve(generators_.size());
  for (const Vec& v : generators_) gens.push_back(phi.apply(v));
  return Zonotope(std::move(gens));
}

ConvexBodyOracle Zonotope::oracle() const {
  auto shared = std::make_shared<const Zonotope>(*this);
  return ConvexBodyOracle(
      dim_, [shared](const Vec& x) { return shared->support(x); }, radius_bound(),
      [shared](const double* dirs, std::size_t count, double* out) {
        shared->support_many(dirs, count, out);
      });
}

Polytope Zonotope::to_polytope() const {
  if (!is_full_dimensional()) throw DegenerateBody();
  // Add one segment at a time, pruning to hull vertices once the partial sum
  // is full-dimensional.
  std::vector<Vec> pts{Vec::Zero(dim_)};
  for (const Vec& v : generators_) {
    std::vector<Vec> next;
    next.reserve(2 * pts.size());
    for (const Vec& p : pts) {
      next.push_back(p + v);
      next.push_back(p - v);
    }
    try {
      pts = Polytope::from_vertices(next).vertices();
    } catch (const DegenerateBody&) {
      if (next.size() > 4096) throw GeometryError("zonotope expansion too large");
      pts = std::move(next);
    }
  }
  return Polytope::from_vertices(pts);
}

Zonotope operator+(const Zonotope& y, const Zonotope& z) {
  if (y.dim() != z.dim()) throw GeometryError("dimension mismatch");
  std::vector<Vec> gens = y.generators();
  gens.insert(gens.end(), z.generators().begin(), z.generators().end());
  return Zonotope(std::move(gens));
}

Zonotope projection_body(const Polytope& p) {
  std::vector<Vec> gens;
  gens.reserve(p.facets().size());
  for (const Facet& f : p.facets()) gens.push_back(0.5 * f.area * f.normal);
  return Zonotope(std::move(gens));
}

DiscreteSphericalMeasure generating_measure(const Zonotope& z) {
  std::vector<Atom> atoms;
  atoms.reserve(2 * z.generators().size());
  for (const Vec& v : z.generators()) {
    const double len = v.norm();
    atoms.push_back({v / len, len});
    atoms.push_back({-v / len, len});
  }
  return DiscreteSphericalMeasure(z.dim(), std::move(atoms));
}

Polytope inverse_projection_body(const Zonotope& z, const SolverConfig& cfg) {
  if (!z.is_full_dimensional()) throw DegenerateBody();
  const DiscreteSphericalMeasure mu = generating_measure(z);
  const Polytope k = solve_minkowski(mu, cfg);

  std::vector<Vec> normals;
  std::vector<double> offsets;
  for (const Facet& f : k.facets()) {
    normals.push_back(f.normal);
    offsets.push_back(0.5 * (f.offset + k.support(-f.normal)));
  }
  return Polytope::from_halfspaces(normals, Eigen::Map<const Vec>(offsets.data(), static_cast<Eigen::Index>(offsets.size())));
}

TransformLawReport check_transform_law(const LinearMap& phi, const Polytope& p, int depth) {
  if (phi.dim() != p.dim()) throw GeometryError("dimension mismatch");
  const int n = p.dim();
  const double det = std::abs(phi.determinant());
  const LinearMap mit = phi.inverse_transpose();
  const SphereSample& s = sphere_sample(n, depth);

  auto discrepancy = [&](const ConvexBodyOracle& a, const ConvexBodyOracle& b) {
    std::vector<double> ha(s.count), hb(s.count);
    a.support_many(s.dirs.data(), s.count, ha.data());
    b.support_many(s.dirs.data(), s.count, hb.data());
    return simd::max_abs_diff(ha.data(), hb.data(), s.count);
  };

  TransformLawReport r;
  const Zonotope pi_p = projection_body(p);
  r.pit_discrepancy = discrepancy(projection_body(apply_linear(phi, p)).oracle(),
                                  pi_p.apply_linear(mit.scaled(det)).oracle());

  SolverConfig tight;
  tight.area_tolerance = 1e-12;
  const Polytope lhs = inverse_projection_body(pi_p.apply_linear(phi), tight);
  const Polytope rhs = apply_linear(mit.scaled(std::pow(det, 1.0 / (n - 1))),
                                    inverse_projection_body(pi_p, tight));
  r.pimt_discrepancy = discrepancy(ConvexBodyOracle::from_polytope(lhs),
                                   ConvexBodyOracle::from_polytope(rhs));
  r.passed = r.pit_discrepancy < r.tolerance && r.pimt_discrepancy < r.tolerance;
  return r;
}

}  // namespace cgeom
