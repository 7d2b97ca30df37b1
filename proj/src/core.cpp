#include "sskm/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sskm {

double cluster_cost(const ClusterInstance& inst, std::span<const int> subset,
                    const Center& center) {
  inst.require_center(center);
  double total = 0.0;
  for (int p : subset) total += inst.center_distance_pow(p, center);
  return total;
}

namespace {

std::vector<double> centroid_of(const ClusterInstance& inst, std::span<const int> subset) {
  std::vector<double> mu(inst.dim(), 0.0);
  for (int p : subset) {
    auto x = inst.point(p);
    for (int d = 0; d < inst.dim(); ++d) mu[d] += x[d];
  }
  for (double& v : mu) v /= static_cast<double>(subset.size());
  return mu;
}

// Weiszfeld iteration for the geometric median. Lands-on-a-point singularities
// are broken by a small deterministic jitter and re-convergence.
OneCenterResult weiszfeld(const ClusterInstance& inst, std::span<const int> subset,
                          const OneCenterOptions& opt) {
  const int dim = inst.dim();
  std::vector<double> y = centroid_of(inst, subset);
  double spread = 0.0;
  for (int p : subset) {
    auto x = inst.point(p);
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += (x[d] - y[d]) * (x[d] - y[d]);
    spread = std::max(spread, std::sqrt(s));
  }
  if (spread == 0.0) {
    OneCenterResult res;
    res.center = Center::at(std::move(y));
    res.cost = 0.0;
    return res;
  }
  const double singular = 1e-13 * spread;
  int jitters = 0;
  for (int iter = 0; iter < opt.max_iters; ++iter) {
    std::vector<double> num(dim, 0.0);
    double den = 0.0;
    bool hit = false;
    for (int p : subset) {
      auto x = inst.point(p);
      double s = 0.0;
      for (int d = 0; d < dim; ++d) s += (x[d] - y[d]) * (x[d] - y[d]);
      double dist = std::sqrt(s);
      if (dist <= singular) {
        hit = true;
        break;
      }
      for (int d = 0; d < dim; ++d) num[d] += x[d] / dist;
      den += 1.0 / dist;
    }
    if (hit) {
      if (++jitters > 64) break;
      double step = 1e-9 * spread * jitters;
      for (int d = 0; d < dim; ++d) y[d] += (d % 2 == 0 ? step : -step);
      continue;
    }
    double moved = 0.0;
    for (int d = 0; d < dim; ++d) {
      double next = num[d] / den;
      moved += (next - y[d]) * (next - y[d]);
      y[d] = next;
    }
    if (std::sqrt(moved) <= opt.move_tol * (1.0 + spread)) break;
  }
  OneCenterResult res;
  res.center = Center::at(std::move(y));
  res.cost = cluster_cost(inst, subset, res.center);
  return res;
}

}  // namespace

OneCenterResult solve_one_center(const ClusterInstance& inst, std::span<const int> subset,
                                 const OneCenterOptions& opt) {
  if (subset.empty()) throw std::invalid_argument("one-center needs a non-empty subset");
  for (int p : subset) inst.require_point(p);

  if (!inst.is_euclidean()) {
    int best = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int q = 0; q < inst.candidate_count(); ++q) {
      double c = cluster_cost(inst, subset, Center::of_candidate(q));
      if (c < best_cost) {
        best_cost = c;
        best = q;
      }
    }
    OneCenterResult res;
    res.center = Center::of_candidate(best);
    res.cost = best_cost;
    return res;
  }

  if (inst.power() == 2) {
    OneCenterResult res;
    res.center = Center::at(centroid_of(inst, subset));
    res.cost = cluster_cost(inst, subset, res.center);
    return res;
  }
  return weiszfeld(inst, subset, opt);
}

namespace {

// Square min-cost assignment with potentials, O(k^3). Integer weights keep
// the matching exact.
long long assignment_min_cost(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  const long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0], j1 = -1;
      long long delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long long cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  long long total = 0;
  for (int j = 1; j <= n; ++j) total += a[match[j] - 1][j - 1];
  return total;
}

}  // namespace

long long clustering_error(const std::vector<int>& labels, const std::vector<int>& reference,
                           int k) {
  if (labels.size() != reference.size())
    throw std::invalid_argument("labelings must cover the same points");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<std::vector<long long>> agree(k, std::vector<long long>(k, 0));
  for (size_t p = 0; p < labels.size(); ++p) {
    int a = labels[p], b = reference[p];
    if (a < 1 || a > k || b < 1 || b > k) throw std::invalid_argument("label out of range");
    agree[a - 1][b - 1] += 1;
  }
  std::vector<std::vector<long long>> cost(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cost[i][j] = -agree[i][j];
  long long best_agreement = -assignment_min_cost(cost);
  return static_cast<long long>(labels.size()) - best_agreement;
}

Clustering assign_nearest(const ClusterInstance& inst, std::span<const Center> centers) {
  if (centers.empty()) throw std::invalid_argument("assign_nearest needs at least one center");
  for (const Center& c : centers) inst.require_center(c);
  std::vector<int> labels(inst.n(), 1);
  double total = 0.0;
  for (int p = 0; p < inst.n(); ++p) {
    int best = 0;
    double best_d = inst.center_distance_sq(p, centers[0]);
    for (int i = 1; i < static_cast<int>(centers.size()); ++i) {
      double d = inst.center_distance_sq(p, centers[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    labels[p] = best + 1;
    total += inst.power() == 2 ? best_d : std::sqrt(best_d);
  }
  Clustering c;
  c.labels = std::move(labels);
  c.centers.assign(centers.begin(), centers.end());
  c.cost = total;
  return c;
}

std::optional<BoundaryViolation> find_boundary_point(const ClusterInstance& inst,
                                                     const std::vector<int>& labels, int k) {
  if (static_cast<int>(labels.size()) != inst.n())
    throw std::invalid_argument("labeling must cover every point");
  std::vector<std::vector<int>> members(k);
  for (int p = 0; p < inst.n(); ++p) {
    int lab = labels[p];
    if (lab < 1 || lab > k) throw std::invalid_argument("label out of range");
    members[lab - 1].push_back(p);
  }
  std::vector<std::optional<Center>> centers(k);
  for (int i = 0; i < k; ++i)
    if (!members[i].empty()) centers[i] = solve_one_center(inst, members[i]).center;
  for (int p = 0; p < inst.n(); ++p) {
    int own = labels[p];
    double own_d = inst.center_distance(p, *centers[own - 1]);
    for (int j = 1; j <= k; ++j) {
      if (j == own || !centers[j - 1]) continue;
      if (inst.center_distance(p, *centers[j - 1]) <= own_d)
        return BoundaryViolation{p, own, j};
    }
  }
  return std::nullopt;
}

Center default_center(const ClusterInstance& inst) {
  if (!inst.is_euclidean()) return Center::of_candidate(0);
  std::vector<int> all(inst.n());
  for (int p = 0; p < inst.n(); ++p) all[p] = p;
  std::vector<double> mu(inst.dim(), 0.0);
  for (int p : all) {
    auto x = inst.point(p);
    for (int d = 0; d < inst.dim(); ++d) mu[d] += x[d];
  }
  for (double& v : mu) v /= inst.n();
  return Center::at(std::move(mu));
}

}  // namespace sskm
