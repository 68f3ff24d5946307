#include "cgeom/sphere.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "cgeom/types.hpp"

namespace cgeom {
namespace {

SphereSample build_circle(int depth) {
  SphereSample s;
  s.dim = 2;
  s.count = static_cast<std::size_t>(24) << depth;
  s.dirs.resize(2 * s.count);
  for (std::size_t i = 0; i < s.count; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(s.count);
    s.dirs[2 * i] = std::cos(a);
    s.dirs[2 * i + 1] = std::sin(a);
  }
  s.mesh_angle = std::numbers::pi / static_cast<double>(s.count);
  return s;
}

SphereSample build_icosphere(int depth) {
  using V3 = Eigen::Vector3d;
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<V3> pts = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                         {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                         {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (V3& p : pts) p.normalize();
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

  for (int level = 0; level < depth; ++level) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      pts.push_back((pts[a] + pts[b]).normalized());
      const int id = static_cast<int>(pts.size()) - 1;
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& [a, b, c] : tris) {
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }

  SphereSample s;
  s.dim = 3;
  s.count = pts.size();
  s.dirs.reserve(3 * pts.size());
  for (const V3& p : pts) s.dirs.insert(s.dirs.end(), {p[0], p[1], p[2]});
  // Covering radius: the farthest sphere point from the samples of a spherical
  // triangle is its circumcenter, the projection of the planar circumcenter.
  for (const auto& [a, b, c] : tris) {
    const V3 ab = pts[b] - pts[a], ac = pts[c] - pts[a];
    const V3 nrm = ab.cross(ac);
    const V3 cc = pts[a] + (ac.squaredNorm() * nrm.cross(ab) + ab.squaredNorm() * ac.cross(nrm)) /
                               (2.0 * nrm.squaredNorm());
    const V3 center = cc.normalized();
    for (int v : {a, b, c}) {
      s.mesh_angle = std::max(s.mesh_angle, std::acos(std::clamp(center.dot(pts[v]), -1.0, 1.0)));
    }
    s.triangles.insert(s.triangles.end(), {a, b, c});
  }
  // Guard against rounding in the acos evaluation.
  s.mesh_angle *= 1.0 + 1e-12;
  return s;
}

}  // namespace

const SphereSample& sphere_sample(int dim, int depth) {
  if (dim != 2 && dim != 3) throw GeometryError("unsupported dimension (only n = 2, 3)");
  if (depth < 0 || depth > 9) throw GeometryError("sphere sample depth must lie in [0, 9]");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SphereSample>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{dim, depth}];
  if (!slot) {
    slot = std::make_unique<SphereSample>(dim == 2 ? build_circle(depth) : build_icosphere(depth));
  }
  return *slot;
}

}  // namespace cgeom
