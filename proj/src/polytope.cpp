#include "cgeom/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

#include "cgeom/hull.hpp"

namespace cgeom {
namespace {

void check_dim(int n) {
  if (n != 2 && n != 3) throw GeometryError("unsupported dimension (only n = 2, 3)");
}

Eigen::Vector3d cross3(const Vec& a, const Vec& b) {
  return Eigen::Vector3d(a[0], a[1], a[2]).cross(Eigen::Vector3d(b[0], b[1], b[2]));
}

// Area and centroid of a facet whose vertices are listed counterclockwise
// around `normal`.
void facet_geometry(const Vec& normal, const std::vector<Vec>& pts, const std::vector<int>& cycle,
                    double& area, Vec& centroid) {
  const int n = static_cast<int>(normal.size());
  if (n == 2) {
    const Vec& a = pts[cycle[0]];
    const Vec& b = pts[cycle[1]];
    area = (b - a).norm();
    centroid = 0.5 * (a + b);
    return;
  }
  const Vec& p0 = pts[cycle[0]];
  area = 0.0;
  centroid = Vec::Zero(3);
  for (std::size_t k = 1; k + 1 < cycle.size(); ++k) {
    const Vec& p1 = pts[cycle[k]];
    const Vec& p2 = pts[cycle[k + 1]];
    const double t = 0.5 * cross3(p1 - p0, p2 - p0).dot(Eigen::Vector3d(normal[0], normal[1], normal[2]));
    area += t;
    centroid += t * (p0 + p1 + p2) / 3.0;
  }
  if (area > 0.0) {
    centroid /= area;
  } else {
    centroid = p0;
  }
}

// Volume and centroid as a union of pyramids over the facets with apex `apex`.
void pyramid_sum(int n, const std::vector<Vec>& normals, const std::vector<double>& areas,
                 const std::vector<Vec>& centroids, const Vec& apex, double& volume,
                 Vec& centroid) {
  volume = 0.0;
  Vec moment = Vec::Zero(n);
  const double lever = static_cast<double>(n) / (n + 1);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (areas[i] <= 0.0) continue;
    const double v = normals[i].dot(centroids[i] - apex) * areas[i] / n;
    volume += v;
    moment += v * (apex + lever * (centroids[i] - apex));
  }
  centroid = volume > 0.0 ? Vec(moment / volume) : apex;
}

// Counterclockwise order (seen from the tip of `normal`) of points in a plane.
void sort_around(const Vec& normal, const std::vector<Vec>& pts, std::vector<int>& cycle) {
  Vec center = Vec::Zero(3);
  for (int v : cycle) center += pts[v];
  center /= static_cast<double>(cycle.size());
  const Eigen::Vector3d u(normal[0], normal[1], normal[2]);
  Eigen::Vector3d e1 = std::abs(u[0]) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  e1 = (e1 - e1.dot(u) * u).normalized();
  const Eigen::Vector3d e2 = u.cross(e1);
  std::vector<std::pair<double, int>> keyed;
  keyed.reserve(cycle.size());
  for (int v : cycle) {
    const Eigen::Vector3d d(pts[v][0] - center[0], pts[v][1] - center[1], pts[v][2] - center[2]);
    keyed.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < keyed.size(); ++k) cycle[k] = keyed[k].second;
}

}  // namespace

namespace detail {

HalfspaceCell halfspace_cell(const std::vector<Vec>& normals, const Vec& offsets,
                             const Vec& interior, double merge_tolerance) {
  const int m = static_cast<int>(normals.size());
  if (m == 0 || offsets.size() != m) throw GeometryError("halfspace list mismatch");
  const int n = static_cast<int>(interior.size());
  check_dim(n);

  std::vector<Vec> dual(m);
  double dual_scale = 0.0;
  for (int i = 0; i < m; ++i) {
    if (normals[i].size() != n) throw GeometryError("dimension mismatch");
    const double slack = offsets[i] - normals[i].dot(interior);
    if (!(slack > 0.0)) throw GeometryError("interior point violates a halfspace");
    dual[i] = normals[i] / slack;
    dual_scale = std::max(dual_scale, dual[i].norm());
  }

  const Hull hull = convex_hull(dual, merge_tolerance);
  for (const HullFacet& f : hull.facets) {
    if (!(f.offset > 1e-12 * dual_scale)) throw DegenerateBody("halfspaces do not bound a body");
  }

  HalfspaceCell cell;
  cell.dim = n;
  const int nv = static_cast<int>(hull.facets.size());
  cell.vertices.resize(nv);
  std::vector<std::vector<int>> incident(m);
  for (int f = 0; f < nv; ++f) {
    const HullFacet& hf = hull.facets[f];
    Mat a(static_cast<Eigen::Index>(hf.cycle.size()), n);
    Vec b(static_cast<Eigen::Index>(hf.cycle.size()));
    for (std::size_t r = 0; r < hf.cycle.size(); ++r) {
      const int i = hf.cycle[r];
      a.row(static_cast<Eigen::Index>(r)) = normals[i].transpose();
      b[static_cast<Eigen::Index>(r)] = offsets[i];
      incident[i].push_back(f);
    }
    // The dual facet plane gives the vertex directly; least squares against the
    // incident primal planes recovers the digits lost in the dual transform.
    const Vec guess = interior + hf.normal / hf.offset;
    const Vec refined = a.colPivHouseholderQr().solve(b);
    cell.vertices[f] = refined.allFinite() ? refined : guess;
  }

  cell.cycles.assign(m, {});
  cell.areas = Vec::Zero(m);
  cell.facet_centroids.assign(m, Vec::Zero(n));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(incident[i].size()) < n) continue;
    std::vector<int> cycle = incident[i];
    if (n == 3) {
      sort_around(normals[i], cell.vertices, cycle);
    } else {
      const Vec& a = cell.vertices[cycle[0]];
      const Vec& b = cell.vertices[cycle[1]];
      const double along = -normals[i][1] * (b[0] - a[0]) + normals[i][0] * (b[1] - a[1]);
      if (along < 0.0) std::swap(cycle[0], cycle[1]);
    }
    double area = 0.0;
    Vec centroid;
    facet_geometry(normals[i], cell.vertices, cycle, area, centroid);
    if (area > 0.0) {
      cell.cycles[i] = std::move(cycle);
      cell.areas[i] = area;
      cell.facet_centroids[i] = centroid;
    }
  }

  if (n == 3) {
    std::map<std::pair<int, int>, std::vector<int>> edge_facets;
    for (int f = 0; f < nv; ++f) {
      const auto& c = hull.facets[f].cycle;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const int a = c[k], b = c[(k + 1) % c.size()];
        edge_facets[{std::min(a, b), std::max(a, b)}].push_back(f);
      }
    }
    for (const auto& [key, fs] : edge_facets) {
      if (fs.size() != 2) throw GeometryError("halfspace cell lost edge adjacency");
      if (cell.areas[key.first] <= 0.0 || cell.areas[key.second] <= 0.0) continue;
      cell.ridges.push_back(
          {key.first, key.second, (cell.vertices[fs[0]] - cell.vertices[fs[1]]).norm()});
    }
  }

  std::vector<double> areas(cell.areas.data(), cell.areas.data() + m);
  pyramid_sum(n, normals, areas, cell.facet_centroids, interior, cell.volume, cell.centroid);
  return cell;
}

}  // namespace detail

Polytope Polytope::from_vertices(std::span<const Vec> points) {
  if (points.empty()) throw DegenerateBody("empty vertex list");
  const int n = static_cast<int>(points[0].size());
  check_dim(n);
  const Hull hull = convex_hull(points);

  Polytope p;
  p.dim_ = n;
  std::vector<int> remap(points.size(), -1);
  for (int v : hull.vertices) {
    remap[v] = static_cast<int>(p.vertices_.size());
    p.vertices_.push_back(points[v]);
  }
  for (const HullFacet& hf : hull.facets) {
    Facet f;
    f.normal = hf.normal;
    for (int v : hf.cycle) f.cycle.push_back(remap[v]);
    f.offset = -std::numeric_limits<double>::infinity();
    for (int v : f.cycle) f.offset = std::max(f.offset, f.normal.dot(p.vertices_[v]));
    facet_geometry(f.normal, p.vertices_, f.cycle, f.area, f.centroid);
    p.facets_.push_back(std::move(f));
  }
  p.finalize();
  return p;
}

Polytope Polytope::from_halfspaces(const std::vector<Vec>& normals, const Vec& offsets,
                                   const Vec& interior, double merge_tolerance) {
  std::vector<Vec> units(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) units[i] = Direction::normalize(normals[i]).coords();
  Vec h = offsets;
  for (std::size_t i = 0; i < normals.size(); ++i) h[static_cast<Eigen::Index>(i)] /= normals[i].norm();
  const detail::HalfspaceCell cell = detail::halfspace_cell(units, h, interior, merge_tolerance);

  Polytope p;
  p.dim_ = cell.dim;
  p.vertices_ = cell.vertices;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (cell.cycles[i].empty()) continue;
    Facet f;
    f.normal = units[i];
    f.offset = h[static_cast<Eigen::Index>(i)];
    f.cycle = cell.cycles[i];
    f.area = cell.areas[static_cast<Eigen::Index>(i)];
    f.centroid = cell.facet_centroids[i];
    p.facets_.push_back(std::move(f));
  }
  p.finalize();
  return p;
}

Polytope Polytope::from_halfspaces(const std::vector<Vec>& normals, const Vec& offsets) {
  if (normals.empty()) throw DegenerateBody("empty halfspace list");
  return from_halfspaces(normals, offsets, Vec::Zero(normals[0].size()));
}

void Polytope::finalize() {
  if (static_cast<int>(facets_.size()) < dim_ + 1) throw DegenerateBody();
  const std::size_t nv = vertices_.size();
  soa_.assign(nv * static_cast<std::size_t>(dim_), 0.0);
  Vec apex = Vec::Zero(dim_);
  for (std::size_t i = 0; i < nv; ++i) {
    for (int k = 0; k < dim_; ++k) soa_[k * nv + i] = vertices_[i][k];
    apex += vertices_[i];
  }
  apex /= static_cast<double>(nv);

  std::vector<Vec> normals;
  std::vector<double> areas;
  std::vector<Vec> centroids;
  for (const Facet& f : facets_) {
    normals.push_back(f.normal);
    areas.push_back(f.area);
    centroids.push_back(f.centroid);
  }
  pyramid_sum(dim_, normals, areas, centroids, apex, volume_, centroid_);
  if (!(volume_ > 0.0)) throw DegenerateBody();
}

simd::PointBlock Polytope::block() const {
  return {soa_.data(), vertices_.size(), vertices_.size(), dim_};
}

double Polytope::support(const Vec& x) const {
  if (x.size() != dim_) throw GeometryError("dimension mismatch");
  return simd::max_dot(block(), x.data());
}

void Polytope::support_many(const double* dirs, std::size_t count, double* out) const {
  simd::max_dot_many(block(), dirs, count, out);
}

double Polytope::surface_area() const {
  double s = 0.0;
  for (const Facet& f : facets_) s += f.area;
  return s;
}

double Polytope::circumradius() const {
  double r = 0.0;
  for (const Vec& v : vertices_) r = std::max(r, v.norm());
  return r;
}

bool Polytope::is_symmetric(double tol) const {
  for (const Vec& v : vertices_) {
    bool found = false;
    for (const Vec& w : vertices_) {
      if ((v + w).norm() <= tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

DiscreteSphericalMeasure surface_area_measure(const Polytope& p) {
  std::vector<Atom> atoms;
  atoms.reserve(p.facets().size());
  for (const Facet& f : p.facets()) atoms.push_back({f.normal, f.area});
  return DiscreteSphericalMeasure(p.dim(), std::move(atoms));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw GeometryError("dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const Vec& a : p.vertices()) {
    for (const Vec& b : q.vertices()) sums.push_back(a + b);
  }
  return Polytope::from_vertices(sums);
}

Polytope apply_linear(const LinearMap& phi, const Polytope& p) {
  if (phi.dim() != p.dim()) throw GeometryError("dimension mismatch");
  std::vector<Vec> image;
  image.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) image.push_back(phi.apply(v));
  return Polytope::from_vertices(image);
}

Polytope translate(const Polytope& p, const Vec& t) {
  if (t.size() != p.dim()) throw GeometryError("dimension mismatch");
  Polytope out = p;
  for (Vec& v : out.vertices_) v += t;
  for (Facet& f : out.facets_) {
    f.offset += f.normal.dot(t);
    f.centroid += t;
  }
  const std::size_t nv = out.vertices_.size();
  for (std::size_t i = 0; i < nv; ++i) {
    for (int k = 0; k < out.dim_; ++k) out.soa_[k * nv + i] = out.vertices_[i][k];
  }
  out.centroid_ += t;
  return out;
}

Polytope recenter(const Polytope& p) { return translate(p, -p.centroid()); }

}  // namespace cgeom
