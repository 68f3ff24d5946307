#include "cgeom/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace cgeom {
namespace {

using detail::HalfspaceCell;

// Near the solution several facet planes often almost meet in one vertex; a
// coarse merge would snap the resulting tiny edges and make the volume jump.
constexpr double kCellMergeTolerance = 1e-14;

std::optional<HalfspaceCell> try_cell(const std::vector<Vec>& normals, const Vec& h) {
  if (!(h.minCoeff() > 0.0) || !h.allFinite()) return std::nullopt;
  try {
    HalfspaceCell cell = detail::halfspace_cell(normals, h, Vec::Zero(normals[0].size()), kCellMergeTolerance);
    if (!(cell.volume > 0.0) || !std::isfinite(cell.volume)) return std::nullopt;
    return cell;
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

void shift_cell(HalfspaceCell& cell, const Vec& t) {
  for (Vec& v : cell.vertices) v += t;
  for (Vec& c : cell.facet_centroids) c += t;
  cell.centroid += t;
}

// Relative area error after the uniform rescale that matches total mass.
double scaled_residual(const Vec& areas, const Vec& w) {
  const double factor = w.sum() / areas.sum();
  double r = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    r = std::max(r, std::abs(areas[i] * factor - w[i]) / w[i]);
  }
  return r;
}

// Largest relative facet-area error of `p` against the atoms of `mu`.
double area_residual(const DiscreteSphericalMeasure& mu, const Polytope& p) {
  double r = 0.0;
  for (const Atom& a : mu.atoms()) {
    double area = 0.0;
    for (const Facet& f : p.facets()) {
      if ((f.normal - a.u).norm() < 1e-7) area += f.area;
    }
    r = std::max(r, std::abs(area - a.w) / a.w);
  }
  return r;
}

Polytope solve_planar(const DiscreteSphericalMeasure& mu, const SolverConfig& cfg,
                      SolverReport* report) {
  std::vector<Atom> atoms = mu.atoms();
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return std::atan2(a.u[1], a.u[0]) < std::atan2(b.u[1], b.u[0]);
  });
  const double total = mu.total_mass();
  // Edge vectors: the outer normal rotated a quarter turn counterclockwise,
  // scaled by the edge length. The tiny closure defect is spread by weight.
  std::vector<Vec> edges;
  Vec closure = Vec::Zero(2);
  for (const Atom& a : atoms) {
    Vec e(2);
    e << -a.u[1] * a.w, a.u[0] * a.w;
    closure += e;
    edges.push_back(std::move(e));
  }
  std::vector<Vec> pts;
  Vec p = Vec::Zero(2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    pts.push_back(p);
    p += edges[i] - closure * (atoms[i].w / total);
  }
  Polytope poly = recenter(Polytope::from_vertices(pts));
  const double residual = area_residual(mu, poly);
  if (report) *report = {0, residual};
  if (!(residual < cfg.area_tolerance)) {
    throw SolverStalled("solver stalled", residual, 0);
  }
  return poly;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(area_tolerance > 0.0)) throw GeometryError("area tolerance must be positive");
  if (max_iterations < 1) throw GeometryError("max iterations must be at least 1");
  if (!(line_search_shrink > 0.0 && line_search_shrink < 1.0)) {
    throw GeometryError("line search shrink must lie in (0, 1)");
  }
}

Polytope solve_minkowski(const DiscreteSphericalMeasure& mu, const SolverConfig& cfg,
                         SolverReport* report) {
  cfg.validate();
  const int n = mu.dim();
  if (n != 2 && n != 3) throw GeometryError("unsupported dimension (only n = 2, 3)");
  mu.check_minkowski_conditions();
  if (n == 2) return solve_planar(mu, cfg, report);

  const int m = static_cast<int>(mu.size());
  std::vector<Vec> normals(m);
  Mat u(m, n);
  Vec w(m);
  for (int i = 0; i < m; ++i) {
    normals[i] = mu.atoms()[i].u;
    u.row(i) = normals[i].transpose();
    w[i] = mu.atoms()[i].w;
  }
  const double total = w.sum();
  const double rate = n / total;

  Vec h = Vec::Ones(m);
  std::optional<HalfspaceCell> cell = try_cell(normals, h);
  if (!cell) throw InvalidMeasure("measure degenerate");

  int iteration = 0;
  double residual = scaled_residual(cell->areas, w);
  for (; iteration < cfg.max_iterations; ++iteration) {
    // Translate so the centroid sits at the origin; this keeps every support
    // number well away from zero.
    const Vec g = cell->centroid;
    h -= u * g;
    shift_cell(*cell, -g);
    // Inactive halfspaces drop to the body, which leaves the body unchanged
    // and lets the next step cut a facet in.
    for (int i = 0; i < m; ++i) {
      if (cell->areas[i] > 0.0) continue;
      double top = -std::numeric_limits<double>::infinity();
      for (const Vec& v : cell->vertices) top = std::max(top, normals[i].dot(v));
      h[i] = std::min(h[i], top);
    }

    residual = scaled_residual(cell->areas, w);
    if (residual < cfg.area_tolerance) break;

    const double vol = cell->volume;
    const Vec& a = cell->areas;
    const double objective = std::log(vol) - rate * w.dot(h);
    const Vec grad = a / vol - rate * w;

    // Hessian of the volume in h: off-diagonal l_ij / sin(theta_ij) for facets
    // sharing an edge, diagonal -sum_j l_ij cot(theta_ij).
    Mat hv = Mat::Zero(m, m);
    for (const auto& r : cell->ridges) {
      const double c = normals[r.i].dot(normals[r.j]);
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      if (!(s > 1e-14)) continue;
      hv(r.i, r.j) += r.length / s;
      hv(r.j, r.i) += r.length / s;
      hv(r.i, r.i) -= r.length * c / s;
      hv(r.j, r.j) -= r.length * c / s;
    }
    Mat system = -hv / vol + (a * a.transpose()) / (vol * vol);
    const double scale = std::max(system.diagonal().cwiseAbs().maxCoeff(), 1e-300);
    // Translations are the null space of the Hessian; pin them.
    system += scale * (u * u.transpose());
    for (int i = 0; i < m; ++i) {
      if (a[i] <= 0.0) system(i, i) += scale;
    }

    Vec step;
    double lambda = 0.0;
    for (int attempt = 0; attempt < 20; ++attempt) {
      Mat damped = system;
      damped.diagonal().array() += lambda;
      Eigen::LLT<Mat> llt(damped);
      if (llt.info() == Eigen::Success) {
        step = llt.solve(grad);
        if (step.allFinite()) break;
      }
      step.resize(0);
      lambda = lambda == 0.0 ? 1e-12 * scale : lambda * 10.0;
    }
    double slope = step.size() == m ? grad.dot(step) : 0.0;
    if (!(slope > 0.0)) {
      step = grad * (0.5 * h.minCoeff() / std::max(grad.cwiseAbs().maxCoeff(), 1e-300));
      slope = grad.dot(step);
    }

    bool accepted = false;
    double t = 1.0;
    const double slack = 1e-13 * (std::abs(objective) + 1.0);
    for (int k = 0; k < 80; ++k, t *= cfg.line_search_shrink) {
      const Vec trial = h + t * step;
      std::optional<HalfspaceCell> next = try_cell(normals, trial);
      if (!next) continue;
      const double value = std::log(next->volume) - rate * w.dot(trial);
      if (value >= objective + 1e-4 * t * slope - slack) {
        h = trial;
        cell = std::move(next);
        accepted = true;
        break;
      }
    }
    if (!accepted) throw SolverStalled("solver stalled", residual, iteration);
  }
  if (!(residual < cfg.area_tolerance)) throw SolverStalled("solver stalled", residual, iteration);
  for (int i = 0; i < m; ++i) {
    if (!(cell->areas[i] > 0.0)) throw SolverStalled("solver stalled", residual, iteration);
  }

  h *= std::pow(total / cell->areas.sum(), 1.0 / (n - 1));
  Polytope poly = recenter(Polytope::from_halfspaces(normals, h, Vec::Zero(n), kCellMergeTolerance));
  const double final_residual = area_residual(mu, poly);
  if (report) *report = {iteration, final_residual};
  if (!(final_residual < cfg.area_tolerance)) {
    throw SolverStalled("solver stalled", final_residual, iteration);
  }
  return poly;
}

Polytope blaschke_sum(const Polytope& k, const Polytope& l, const SolverConfig& cfg) {
  if (k.dim() != l.dim()) throw GeometryError("dimension mismatch");
  return solve_minkowski(add_measures(surface_area_measure(k), surface_area_measure(l)), cfg);
}

Polytope scale_body(double a, const Polytope& k) {
  if (!(a > 0.0) || !std::isfinite(a)) throw GeometryError("scale factor must be positive");
  return apply_linear(LinearMap::scaling(k.dim(), a), k);
}

}  // namespace cgeom
