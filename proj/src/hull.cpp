#include "cgeom/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "cgeom/predicates.hpp"

namespace cgeom {
namespace {

using P3 = std::array<double, 3>;
using Tri = std::array<int, 3>;

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm2(const P3& a) { return dot(a, a); }

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

double diameter_bound(const std::vector<P3>& p, int dim) {
  P3 lo = p[0], hi = p[0];
  for (const P3& q : p) {
    for (int k = 0; k < dim; ++k) {
      lo[k] = std::min(lo[k], q[k]);
      hi[k] = std::max(hi[k], q[k]);
    }
  }
  double d2 = 0.0;
  for (int k = 0; k < dim; ++k) d2 += (hi[k] - lo[k]) * (hi[k] - lo[k]);
  return std::sqrt(d2);
}

// ---------------------------------------------------------------------------
// Planar hull: monotone chain with exact turns, then tolerance cleanup of
// nearly collinear vertices.

Hull hull2(const std::vector<P3>& p, double merge_tolerance) {
  const int n = static_cast<int>(p.size());
  if (n < 3) throw DegenerateBody();

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return p[a][0] < p[b][0] || (p[a][0] == p[b][0] && p[a][1] < p[b][1]);
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) { return p[a][0] == p[b][0] && p[a][1] == p[b][1]; }),
            idx.end());
  if (idx.size() < 3) throw DegenerateBody();

  std::vector<int> chain(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && predicates::orient2d(p[chain[k - 2]].data(), p[chain[k - 1]].data(),
                                          p[i].data()) <= 0) {
      --k;
    }
    chain[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const int i = idx[j];
    while (k >= lower && predicates::orient2d(p[chain[k - 2]].data(), p[chain[k - 1]].data(),
                                              p[i].data()) <= 0) {
      --k;
    }
    chain[k++] = i;
  }
  chain.resize(k - 1);
  if (chain.size() < 3) throw DegenerateBody();

  const double tol = merge_tolerance * diameter_bound(p, 2);
  bool changed = true;
  while (changed && chain.size() > 3) {
    changed = false;
    for (std::size_t j = 0; j < chain.size() && chain.size() > 3; ++j) {
      const P3& a = p[chain[(j + chain.size() - 1) % chain.size()]];
      const P3& b = p[chain[j]];
      const P3& c = p[chain[(j + 1) % chain.size()]];
      const double ex = c[0] - a[0], ey = c[1] - a[1];
      const double len = std::hypot(ex, ey);
      const double dist = std::abs(ex * (b[1] - a[1]) - ey * (b[0] - a[0])) / len;
      if (dist <= tol) {
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        --j;
      }
    }
  }

  Hull hull;
  hull.dim = 2;
  hull.vertices = chain;
  std::sort(hull.vertices.begin(), hull.vertices.end());
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const int a = chain[j];
    const int b = chain[(j + 1) % chain.size()];
    const double dx = p[b][0] - p[a][0], dy = p[b][1] - p[a][1];
    const double len = std::hypot(dx, dy);
    HullFacet f;
    f.cycle = {a, b};
    f.normal = Vec(2);
    f.normal << dy / len, -dx / len;
    f.offset = std::max(f.normal[0] * p[a][0] + f.normal[1] * p[a][1],
                        f.normal[0] * p[b][0] + f.normal[1] * p[b][1]);
    hull.facets.push_back(std::move(f));
  }
  return hull;
}

// ---------------------------------------------------------------------------
// Spatial hull: incremental construction with exact visibility tests.

std::vector<Tri> hull3_triangles(const std::vector<P3>& p) {
  const int n = static_cast<int>(p.size());
  if (n < 4) throw DegenerateBody();

  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    if (p[i] < p[i0]) i0 = i;
  }
  int i1 = -1;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = norm2(sub(p[i], p[i0]));
    if (d > best) best = d, i1 = i;
  }
  if (i1 < 0) throw DegenerateBody();
  int i2 = -1;
  best = 0.0;
  const P3 axis = sub(p[i1], p[i0]);
  for (int i = 0; i < n; ++i) {
    const double d = norm2(cross(axis, sub(p[i], p[i0])));
    if (d > best) best = d, i2 = i;
  }
  if (i2 < 0) throw DegenerateBody();
  int i3 = -1;
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(predicates::orient3d_approx(p[i0].data(), p[i1].data(),
                                                          p[i2].data(), p[i].data()));
    if (d > best) best = d, i3 = i;
  }
  if (i3 < 0 ||
      predicates::orient3d(p[i0].data(), p[i1].data(), p[i2].data(), p[i3].data()) == 0) {
    i3 = -1;
    for (int i = 0; i < n && i3 < 0; ++i) {
      if (predicates::orient3d(p[i0].data(), p[i1].data(), p[i2].data(), p[i].data()) != 0) i3 = i;
    }
    if (i3 < 0) throw DegenerateBody();
  }

  std::vector<Tri> faces;
  std::vector<char> alive;
  std::unordered_map<std::uint64_t, int> edge_face;
  auto add_face = [&](int a, int b, int c) {
    const int id = static_cast<int>(faces.size());
    faces.push_back({a, b, c});
    alive.push_back(1);
    edge_face[edge_key(a, b)] = id;
    edge_face[edge_key(b, c)] = id;
    edge_face[edge_key(c, a)] = id;
  };
  auto kill_face = [&](int f) {
    alive[f] = 0;
    const Tri& t = faces[f];
    for (int e = 0; e < 3; ++e) {
      auto it = edge_face.find(edge_key(t[e], t[(e + 1) % 3]));
      if (it != edge_face.end() && it->second == f) edge_face.erase(it);
    }
  };

  const std::array<std::array<int, 4>, 4> initial{{{i0, i1, i2, i3},
                                                   {i0, i1, i3, i2},
                                                   {i0, i2, i3, i1},
                                                   {i1, i2, i3, i0}}};
  for (auto [a, b, c, opp] : initial) {
    if (predicates::orient3d(p[a].data(), p[b].data(), p[c].data(), p[opp].data()) > 0) {
      std::swap(b, c);
    }
    add_face(a, b, c);
  }

  P3 center{0.0, 0.0, 0.0};
  for (int i : {i0, i1, i2, i3}) {
    for (int k = 0; k < 3; ++k) center[k] += p[i][k] / 4.0;
  }
  std::vector<int> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return norm2(sub(p[a], center)) > norm2(sub(p[b], center));
  });

  std::vector<int> live = {0, 1, 2, 3};
  std::vector<int> visible;
  std::vector<char> is_visible;
  std::vector<std::pair<int, int>> horizon;
  for (int q : order) {
    visible.clear();
    for (int f : live) {
      const Tri& t = faces[f];
      if (predicates::orient3d(p[t[0]].data(), p[t[1]].data(), p[t[2]].data(), p[q].data()) > 0) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;

    is_visible.assign(faces.size(), 0);
    for (int f : visible) is_visible[f] = 1;
    horizon.clear();
    for (int f : visible) {
      const Tri& t = faces[f];
      for (int e = 0; e < 3; ++e) {
        const int a = t[e], b = t[(e + 1) % 3];
        auto it = edge_face.find(edge_key(b, a));
        if (it == edge_face.end()) throw GeometryError("convex hull lost adjacency");
        if (!is_visible[it->second]) horizon.emplace_back(a, b);
      }
    }
    for (int f : visible) kill_face(f);
    for (auto [a, b] : horizon) add_face(a, b, q);

    live.clear();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (alive[f]) live.push_back(f);
    }
  }

  std::vector<Tri> out;
  out.reserve(live.size());
  for (int f : live) out.push_back(faces[f]);
  return out;
}

Hull hull3(const std::vector<P3>& p, double merge_tolerance) {
  const std::vector<Tri> tris = hull3_triangles(p);
  const int nt = static_cast<int>(tris.size());

  std::unordered_map<std::uint64_t, int> edge_tri;
  for (int t = 0; t < nt; ++t) {
    for (int e = 0; e < 3; ++e) edge_tri[edge_key(tris[t][e], tris[t][(e + 1) % 3])] = t;
  }
  std::vector<std::array<int, 3>> nbr(nt);
  for (int t = 0; t < nt; ++t) {
    for (int e = 0; e < 3; ++e) {
      nbr[t][e] = edge_tri.at(edge_key(tris[t][(e + 1) % 3], tris[t][e]));
    }
  }

  const double tol = merge_tolerance * diameter_bound(p, 3);
  std::vector<double> area(nt);
  std::vector<P3> unit(nt);
  for (int t = 0; t < nt; ++t) {
    const P3 c = cross(sub(p[tris[t][1]], p[tris[t][0]]), sub(p[tris[t][2]], p[tris[t][0]]));
    const double len = std::sqrt(norm2(c));
    area[t] = len;
    unit[t] = len > 0.0 ? P3{c[0] / len, c[1] / len, c[2] / len} : P3{0.0, 0.0, 0.0};
  }
  std::vector<int> order(nt);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return area[a] > area[b]; });

  // Region growing from the largest triangle: a neighbor joins when all of its
  // vertices lie within `tol` of the seed plane.
  std::vector<int> region(nt, -1);
  int nregions = 0;
  std::vector<int> stack;
  for (int seed : order) {
    if (region[seed] >= 0) continue;
    const int r = nregions++;
    const P3 nrm = unit[seed];
    const double off = dot(nrm, p[tris[seed][0]]);
    region[seed] = r;
    stack.assign(1, seed);
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (int e = 0; e < 3; ++e) {
        const int q = nbr[s][e];
        if (region[q] >= 0) continue;
        bool coplanar = true;
        for (int v : tris[q]) coplanar = coplanar && std::abs(dot(nrm, p[v]) - off) <= tol;
        if (coplanar) {
          region[q] = r;
          stack.push_back(q);
        }
      }
    }
  }

  // Boundary cycle of each region.
  std::vector<std::unordered_map<int, int>> next(nregions);
  for (int t = 0; t < nt; ++t) {
    for (int e = 0; e < 3; ++e) {
      if (region[nbr[t][e]] != region[t]) {
        auto [it, fresh] = next[region[t]].emplace(tris[t][e], tris[t][(e + 1) % 3]);
        if (!fresh) throw GeometryError("hull facet merging produced a pinched facet");
      }
    }
  }
  std::vector<std::vector<int>> cycles(nregions);
  for (int r = 0; r < nregions; ++r) {
    const auto& nx = next[r];
    if (nx.empty()) throw GeometryError("hull facet without boundary");
    const int start = std::min_element(nx.begin(), nx.end())->first;
    int v = start;
    do {
      cycles[r].push_back(v);
      v = nx.at(v);
    } while (v != start && cycles[r].size() <= nx.size());
    if (cycles[r].size() != nx.size()) {
      throw GeometryError("hull facet merging produced a disconnected facet");
    }
  }

  // Drop points on fewer than three facets (edge or facet interior points).
  std::vector<int> incidence(p.size());
  for (;;) {
    std::fill(incidence.begin(), incidence.end(), 0);
    for (const auto& c : cycles) {
      for (int v : c) ++incidence[v];
    }
    bool changed = false;
    for (auto& c : cycles) {
      const auto old = c.size();
      std::erase_if(c, [&](int v) { return incidence[v] < 3; });
      changed = changed || c.size() != old;
    }
    const auto before = cycles.size();
    std::erase_if(cycles, [](const std::vector<int>& c) { return c.size() < 3; });
    if (!changed && cycles.size() == before) break;
  }
  if (cycles.size() < 4) throw DegenerateBody();

  Hull hull;
  hull.dim = 3;
  for (auto& c : cycles) {
    P3 center{0.0, 0.0, 0.0};
    for (int v : c) {
      for (int k = 0; k < 3; ++k) center[k] += p[v][k] / static_cast<double>(c.size());
    }
    P3 nw{0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < c.size(); ++j) {
      const P3 t = cross(sub(p[c[j]], center), sub(p[c[(j + 1) % c.size()]], center));
      for (int k = 0; k < 3; ++k) nw[k] += t[k];
    }
    const double len = std::sqrt(norm2(nw));
    if (!(len > 0.0)) throw GeometryError("hull facet with zero area");
    HullFacet f;
    f.normal = Vec(3);
    f.normal << nw[0] / len, nw[1] / len, nw[2] / len;
    f.offset = -std::numeric_limits<double>::infinity();
    for (int v : c) {
      f.offset = std::max(f.offset, f.normal[0] * p[v][0] + f.normal[1] * p[v][1] +
                                        f.normal[2] * p[v][2]);
    }
    f.cycle = std::move(c);
    hull.facets.push_back(std::move(f));
  }
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (incidence[v] >= 3) hull.vertices.push_back(static_cast<int>(v));
  }
  return hull;
}

}  // namespace

Hull convex_hull(std::span<const Vec> points, double merge_tolerance) {
  if (points.empty()) throw DegenerateBody();
  const int dim = static_cast<int>(points[0].size());
  if (dim != 2 && dim != 3) throw GeometryError("unsupported dimension (only n = 2, 3)");
  std::vector<P3> p;
  p.reserve(points.size());
  for (const Vec& v : points) {
    if (v.size() != dim) throw GeometryError("dimension mismatch");
    if (!v.allFinite()) throw GeometryError("non-finite coordinate");
    p.push_back({v[0], v[1], dim == 3 ? v[2] : 0.0});
  }
  return dim == 2 ? hull2(p, merge_tolerance) : hull3(p, merge_tolerance);
}

}  // namespace cgeom
