#include "sskm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sskm/core.hpp"
#include "sskm/errors.hpp"
#include "sskm/rng.hpp"

namespace sskm {

namespace {

std::vector<std::vector<double>> place_blob_centers(int k, int r, double separation, Rng& rng) {
  const double box = separation * (k + 1);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<std::vector<double>> centers;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      bool placed = false;
      for (int tries = 0; tries < 1000; ++tries) {
        std::vector<double> c(r);
        for (double& v : c) v = rng.uniform_in(0.0, box);
        bool clear = true;
        for (const auto& other : centers) {
          double s = 0.0;
          for (int d = 0; d < r; ++d) s += (c[d] - other[d]) * (c[d] - other[d]);
          if (std::sqrt(s) < separation) {
            clear = false;
            break;
          }
        }
        if (clear) {
          centers.push_back(std::move(c));
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (ok) return centers;
  }
  throw GenerationError("could not place " + std::to_string(k) +
                        " blob centers at the requested separation");
}

}  // namespace

GeneratedInstance gen_gaussian(int k, int n, int r, double separation, uint64_t seed, int power) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  if (r < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(separation > 0.0)) throw std::invalid_argument("separation must be positive");

  Rng rng(seed);
  std::vector<std::vector<double>> blob_centers = place_blob_centers(k, r, separation, rng);

  std::vector<int> labels(n);
  std::vector<std::vector<double>> points(n, std::vector<double>(r));
  const int base = n / k, extra = n % k;
  int p = 0;
  for (int i = 0; i < k; ++i) {
    int size = base + (i < extra ? 1 : 0);
    for (int j = 0; j < size; ++j, ++p) {
      labels[p] = i + 1;
      for (int d = 0; d < r; ++d) points[p][d] = blob_centers[i][d] + rng.normal();
    }
  }

  // enforce the strict-margin property against centers derived from the
  // planted labeling, resampling any offender
  for (int pass = 0;; ++pass) {
    if (pass >= 100) throw GenerationError("no-boundary repair did not converge");
    ClusterInstance inst = ClusterInstance::euclidean(points, k, power);
    std::vector<std::vector<int>> members(k);
    for (int q = 0; q < n; ++q) members[labels[q] - 1].push_back(q);
    std::vector<Center> derived(k);
    for (int i = 0; i < k; ++i) derived[i] = solve_one_center(inst, members[i]).center;
    std::vector<int> offenders;
    for (int q = 0; q < n; ++q) {
      double own = inst.center_distance(q, derived[labels[q] - 1]);
      for (int j = 0; j < k; ++j) {
        if (j == labels[q] - 1) continue;
        if (inst.center_distance(q, derived[j]) <= own) {
          offenders.push_back(q);
          break;
        }
      }
    }
    if (offenders.empty()) {
      GroundTruth truth(labels, k);
      return {std::move(inst), std::move(truth)};
    }
    for (int q : offenders) {
      int i = labels[q] - 1;
      for (int d = 0; d < r; ++d) points[q][d] = blob_centers[i][d] + rng.normal();
    }
  }
}

GeneratedInstance gen_hypercube(int r) {
  if (r < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<std::vector<double>> points;
  std::vector<int> labels;
  points.reserve(2 * r);
  for (int i = 0; i < r; ++i) {
    std::vector<double> minus(r, 0.0), plus(r, 0.0);
    minus[i] = -1.0;
    plus[i] = 1.0;
    points.push_back(std::move(minus));
    labels.push_back(2);
    points.push_back(std::move(plus));
    labels.push_back(1);
  }
  ClusterInstance inst = ClusterInstance::euclidean(points, 2, 2);
  return {std::move(inst), GroundTruth(std::move(labels), 2)};
}

ClusterInstance gen_fms_from_subsets(int r) {
  if (r < 1) throw std::invalid_argument("dimension must be >= 1");
  if (r > 6)
    throw ResourceLimitError("subset-centroid candidate space needs a 4^r distance matrix; r <= 6");
  GeneratedInstance cube = gen_hypercube(r);
  const int np = 2 * r;
  std::vector<std::vector<double>> rows;
  rows.reserve(np);
  for (int p = 0; p < np; ++p) {
    auto x = cube.instance.point(p);
    rows.emplace_back(x.begin(), x.end());
  }

  std::vector<std::vector<double>> candidates;
  const unsigned long long masks = 1ULL << np;
  for (unsigned long long mask = 1; mask < masks; ++mask) {
    std::vector<double> mu(r, 0.0);
    int count = 0;
    for (int p = 0; p < np; ++p) {
      if (mask & (1ULL << p)) {
        for (int d = 0; d < r; ++d) mu[d] += rows[p][d];
        ++count;
      }
    }
    for (double& v : mu) v /= count;
    bool dup = false;
    for (const auto& c : candidates) {
      bool same = true;
      for (int d = 0; d < r; ++d) {
        if (std::abs(c[d] - mu[d]) > 1e-12) {
          same = false;
          break;
        }
      }
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) candidates.push_back(std::move(mu));
  }

  std::vector<std::vector<double>> all = rows;
  all.insert(all.end(), candidates.begin(), candidates.end());
  const int total = static_cast<int>(all.size());
  std::vector<std::vector<double>> dist(total, std::vector<double>(total, 0.0));
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      double s = 0.0;
      for (int d = 0; d < r; ++d) s += (all[a][d] - all[b][d]) * (all[a][d] - all[b][d]);
      dist[a][b] = dist[b][a] = std::sqrt(s);
    }
  }
  return ClusterInstance::finite_metric(np, dist, 2, 2);
}

double hypercube_split_cost(int r0, int r1, int r2) {
  if (r0 < 0 || r1 < 0 || r2 < 0) throw std::invalid_argument("axis counts must be nonnegative");
  const double r = r0 + r1 + r2;
  auto term = [&](int other) {
    double den = r1 + 2.0 * other;
    return den == 0.0 ? 0.0 : r1 / den;
  };
  return 2.0 * r - term(r2) - term(r0);
}

HypercubeOptimaReport verify_hypercube_optima(int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("exhaustive split check supports r in [1, 8]");
  GeneratedInstance cube = gen_hypercube(r);
  const ClusterInstance& inst = cube.instance;
  const int np = 2 * r;

  auto side_cost = [&](const std::vector<int>& side) {
    if (side.empty()) return 0.0;
    return solve_one_center(inst, side).cost;
  };

  // fix point 0 on side A; every unordered bipartition appears exactly once
  const unsigned long long total = 1ULL << (np - 1);
  std::vector<double> costs(total);
  double min_cost = std::numeric_limits<double>::infinity();
  for (unsigned long long m = 0; m < total; ++m) {
    unsigned long long mask = (m << 1) | 1ULL;
    std::vector<int> a, b;
    for (int p = 0; p < np; ++p) ((mask >> p) & 1ULL ? a : b).push_back(p);
    costs[m] = side_cost(a) + side_cost(b);
    min_cost = std::min(min_cost, costs[m]);
  }

  HypercubeOptimaReport rep;
  rep.r = r;
  rep.min_cost = min_cost;
  rep.expected_min_cost = 2.0 * r - 2.0;
  rep.all_split_pairs = true;
  for (unsigned long long m = 0; m < total; ++m) {
    if (costs[m] > min_cost + 1e-9) continue;
    ++rep.optima_count;
    unsigned long long mask = (m << 1) | 1ULL;
    for (int i = 0; i < r; ++i) {
      bool minus_in_a = (mask >> (2 * i)) & 1ULL;
      bool plus_in_a = (mask >> (2 * i + 1)) & 1ULL;
      if (minus_in_a == plus_in_a) rep.all_split_pairs = false;
    }
  }
  rep.pass = rep.all_split_pairs && std::abs(rep.min_cost - rep.expected_min_cost) <= 1e-9;
  return rep;
}

}  // namespace sskm
