#include "cgeom/measure.hpp"

#include <algorithm>
#include <cmath>

namespace cgeom {
namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

// Merges atoms with nearby directions, keeping the direction of the first atom
// of each cluster in lexicographic order.
std::vector<Atom> merge_atoms(std::vector<Atom> atoms, double tol) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return lex_less(a.u, b.u); });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (Atom& a : atoms) {
    bool absorbed = false;
    // Sorted by the first coordinate, so only a window of recent clusters can
    // lie within `tol`.
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
      if (a.u[0] - it->u[0] > tol) break;
      if ((a.u - it->u).norm() < tol) {
        it->w += a.w;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(std::move(a));
  }
  return merged;
}

}  // namespace

DiscreteSphericalMeasure::DiscreteSphericalMeasure(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidMeasure("measure dimension must be positive");
}

DiscreteSphericalMeasure::DiscreteSphericalMeasure(int dim, std::vector<Atom> atoms)
    : dim_(dim) {
  if (dim < 1) throw InvalidMeasure("measure dimension must be positive");
  std::vector<Atom> kept;
  kept.reserve(atoms.size());
  for (Atom& a : atoms) {
    if (a.u.size() != dim) throw InvalidMeasure("atom dimension mismatch");
    if (!std::isfinite(a.w)) throw InvalidMeasure("atom weight is not finite");
    if (a.w < 0.0) throw InvalidMeasure("negative atom weight");
    if (a.w == 0.0) continue;
    const double norm = a.u.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidMeasure("atom direction is zero");
    if (norm != 1.0) a.u /= norm;
    kept.push_back(std::move(a));
  }
  atoms_ = merge_atoms(std::move(kept), kMergeTolerance);
}

double DiscreteSphericalMeasure::total_mass() const {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.w;
  return total;
}

Vec DiscreteSphericalMeasure::centroid() const {
  Vec c = Vec::Zero(dim_);
  for (const Atom& a : atoms_) c += a.w * a.u;
  return c;
}

double DiscreteSphericalMeasure::min_singular_value() const {
  if (atoms_.size() < static_cast<std::size_t>(dim_)) return 0.0;
  Mat m(static_cast<Eigen::Index>(atoms_.size()), dim_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = atoms_[i].u.transpose();
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()[dim_ - 1];
}

bool DiscreteSphericalMeasure::is_even(double tol) const {
  for (const Atom& a : atoms_) {
    bool found = false;
    for (const Atom& b : atoms_) {
      if ((a.u + b.u).norm() < kMergeTolerance) {
        found = std::abs(a.w - b.w) <= tol * std::max(1.0, a.w);
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

void DiscreteSphericalMeasure::check_minkowski_conditions() const {
  if (centroid().norm() >= kCentroidTolerance * std::max(1.0, total_mass())) {
    throw InvalidMeasure("measure centroid nonzero");
  }
  if (!(min_singular_value() > kSubsphereTolerance)) {
    throw InvalidMeasure("measure degenerate");
  }
}

DiscreteSphericalMeasure DiscreteSphericalMeasure::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) throw InvalidMeasure("invalid scale factor");
  std::vector<Atom> atoms = atoms_;
  for (Atom& a : atoms) a.w *= factor;
  return DiscreteSphericalMeasure(dim_, std::move(atoms));
}

DiscreteSphericalMeasure add_measures(const DiscreteSphericalMeasure& mu,
                                      const DiscreteSphericalMeasure& nu) {
  if (mu.dim() != nu.dim()) throw InvalidMeasure("dimension mismatch");
  std::vector<Atom> atoms = mu.atoms();
  atoms.insert(atoms.end(), nu.atoms().begin(), nu.atoms().end());
  return DiscreteSphericalMeasure(mu.dim(), std::move(atoms));
}

DiscreteSphericalMeasure pushforward_measure(const LinearMap& phi,
                                             const DiscreteSphericalMeasure& mu) {
  if (phi.dim() != mu.dim()) throw InvalidMeasure("dimension mismatch");
  mu.check_minkowski_conditions();
  const Mat mit = phi.inverse_transpose().matrix();
  const double det = std::abs(phi.determinant());
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) {
    const Vec v = mit * a.u;
    const double len = v.norm();
    atoms.push_back({v / len, det * len * a.w});
  }
  return DiscreteSphericalMeasure(mu.dim(), std::move(atoms));
}

double atom_discrepancy(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                        double direction_tol) {
  if (mu.dim() != nu.dim()) throw InvalidMeasure("dimension mismatch");
  std::vector<char> used(nu.size(), 0);
  double worst = 0.0;
  for (const Atom& a : mu.atoms()) {
    std::size_t best = nu.size();
    double best_dist = direction_tol;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (used[j]) continue;
      const double d = (a.u - nu.atoms()[j].u).norm();
      if (d < best_dist) best_dist = d, best = j;
    }
    if (best == nu.size()) {
      worst = std::max(worst, a.w);
    } else {
      used[best] = 1;
      worst = std::max(worst, std::abs(a.w - nu.atoms()[best].w));
    }
  }
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (!used[j]) worst = std::max(worst, nu.atoms()[j].w);
  }
  return worst;
}

}  // namespace cgeom
