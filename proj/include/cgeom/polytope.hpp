#pragma once

#include <span>
#include <vector>

#include "cgeom/measure.hpp"
#include "cgeom/simd.hpp"
#include "cgeom/types.hpp"

namespace cgeom {

struct Facet {
  Vec normal;                ///< outer unit normal
  double offset = 0.0;       ///< support number h_P(normal)
  std::vector<int> cycle;    ///< vertex indices, counterclockwise seen from outside
  double area = 0.0;         ///< (n-1)-volume
  Vec centroid;              ///< (n-1)-volume centroid
};

/// Full-dimensional convex polytope in R^2 or R^3 with paired vertex and facet
/// lists. Immutable after construction.
class Polytope {
 public:
  /// Convex hull of `points`; throws DegenerateBody if it has empty interior.
  static Polytope from_vertices(std::span<const Vec> points);
  static Polytope from_vertices(const std::vector<Vec>& points) {
    return from_vertices(std::span<const Vec>(points));
  }

  /// Intersection of the halfspaces u_i . x <= h_i. `interior` must satisfy
  /// every inequality strictly; throws DegenerateBody if the intersection is
  /// unbounded or lower-dimensional. Facet normals are the given u_i exactly.
  /// Vertices closer than about merge_tolerance * size are identified.
  static Polytope from_halfspaces(const std::vector<Vec>& normals, const Vec& offsets,
                                  const Vec& interior, double merge_tolerance = 1e-12);
  static Polytope from_halfspaces(const std::vector<Vec>& normals, const Vec& offsets);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  double support(const Vec& x) const;
  /// Support values for `count` directions stored contiguously.
  void support_many(const double* dirs, std::size_t count, double* out) const;
  simd::PointBlock block() const;

  double volume() const { return volume_; }
  const Vec& centroid() const { return centroid_; }
  double surface_area() const;
  /// max |v| over vertices: radius of the smallest origin-centered enclosing ball.
  double circumradius() const;
  /// Vertex set closed under negation within tol.
  bool is_symmetric(double tol = 1e-9) const;

 private:
  friend Polytope translate(const Polytope& p, const Vec& t);

  Polytope() = default;
  void finalize();

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  std::vector<double> soa_;
  double volume_ = 0.0;
  Vec centroid_;
};

DiscreteSphericalMeasure surface_area_measure(const Polytope& p);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope apply_linear(const LinearMap& phi, const Polytope& p);
Polytope translate(const Polytope& p, const Vec& t);
/// Translate with centroid at the origin.
Polytope recenter(const Polytope& p);

namespace detail {

/// Intersection of halfspaces u_i . x <= h_i around a strictly interior point,
/// with per-halfspace facet data. Inactive halfspaces (touching the cell in a
/// face of dimension < n-1, or not at all) get an empty cycle and zero area.
struct HalfspaceCell {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> cycles;
  Vec areas;
  std::vector<Vec> facet_centroids;
  /// Ridges (n = 3: edges) as (i, j, length) between active facets i < j.
  struct Ridge {
    int i;
    int j;
    double length;
  };
  std::vector<Ridge> ridges;
  double volume = 0.0;
  Vec centroid;
};

HalfspaceCell halfspace_cell(const std::vector<Vec>& normals, const Vec& offsets,
                             const Vec& interior, double merge_tolerance = 1e-12);

}  // namespace detail

}  // namespace cgeom
