#include "cgeom/lp_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace cgeom {

MaxFlow::MaxFlow(int nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

void MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  adj_[from].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({to, capacity});
  adj_[to].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({from, 0});
}

bool MaxFlow::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  level_[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int id : adj_[v]) {
      const Edge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int sink, std::int64_t pushed) {
  if (v == sink) return pushed;
  for (; next_[v] < adj_[v].size(); ++next_[v]) {
    const int id = adj_[v][next_[v]];
    Edge& e = edges_[id];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    const std::int64_t got = dfs(e.to, sink, std::min(pushed, e.cap));
    if (got > 0) {
      e.cap -= got;
      edges_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t flow = 0;
  while (bfs(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (const std::int64_t f = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
      flow += f;
    }
  }
  return flow;
}

namespace {

// Weights become integers at this scale so the flow is exact.
constexpr double kCapacityScale = 1e12;
// A_eps is open: atoms at chordal distance eps are not neighbors.
constexpr double kStrictMargin = 1e-15;
// Smallest eps tried; the distance is reported as 0 if this already works.
constexpr double kZeroProbe = 2e-15;

double capacity_scale(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu) {
  const double total = mu.total_mass() + nu.total_mass();
  const double limit = 0x1p61;
  return total * kCapacityScale > limit ? limit / total : kCapacityScale;
}

}  // namespace

double lp_deficiency(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                     double eps) {
  if (mu.dim() != nu.dim()) throw InvalidMeasure("dimension mismatch");
  const double scale = capacity_scale(mu, nu);
  const int a = static_cast<int>(mu.size());
  const int b = static_cast<int>(nu.size());
  const int source = a + b, sink = a + b + 1;
  MaxFlow flow(a + b + 2);
  std::int64_t supply = 0;
  for (int i = 0; i < a; ++i) {
    const auto c = static_cast<std::int64_t>(std::llround(mu.atoms()[i].w * scale));
    supply += c;
    flow.add_edge(source, i, c);
    for (int j = 0; j < b; ++j) {
      if ((mu.atoms()[i].u - nu.atoms()[j].u).norm() < eps - kStrictMargin) flow.add_edge(i, a + j, c);
    }
  }
  for (int j = 0; j < b; ++j) {
    flow.add_edge(a + j, sink, static_cast<std::int64_t>(std::llround(nu.atoms()[j].w * scale)));
  }
  return static_cast<double>(supply - flow.run(source, sink)) / scale;
}

bool lp_feasible(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                 double eps) {
  if (!(eps > 0.0)) throw InvalidMeasure("eps must be positive");
  return lp_deficiency(mu, nu, eps) <= eps && lp_deficiency(nu, mu, eps) <= eps;
}

LpDistanceResult lp_distance(const DiscreteSphericalMeasure& mu, const DiscreteSphericalMeasure& nu,
                             double tol) {
  if (mu.dim() != nu.dim()) throw InvalidMeasure("dimension mismatch");
  if (!(tol > 0.0)) throw InvalidMeasure("tolerance must be positive");
  if (lp_feasible(mu, nu, kZeroProbe)) return {0.0, kZeroProbe, tol};
  // Every pair of atoms is within chordal distance 2, so any eps beyond
  // max(2, mass gap) is feasible.
  double lo = kZeroProbe;
  double hi = std::max(2.0, std::abs(mu.total_mass() - nu.total_mass()) + 2.0) + tol;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (lp_feasible(mu, nu, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, hi, tol};
}

double delta_lp(const Polytope& k, const Polytope& l, double tol) {
  return lp_distance(surface_area_measure(k), surface_area_measure(l), tol).value;
}

double delta_bar_lp(const Zonotope& y, const Zonotope& z, double tol) {
  return lp_distance(generating_measure(y), generating_measure(z), tol).value;
}

}  // namespace cgeom
