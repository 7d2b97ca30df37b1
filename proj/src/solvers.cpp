#include "sskm/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "sskm/rng.hpp"

namespace sskm {

long long default_dsq_batch(int k, double eps) {
  return static_cast<long long>(std::ceil(64.0 * k * k * k / (eps * eps)));
}

int default_boost_rounds(double delta) {
  return std::max(1, static_cast<int>(std::ceil(4.0 * std::log(1.0 / delta))));
}

namespace {

void check_solver_config(const SolverConfig& cfg) {
  if (cfg.alpha_restarts < 1 || cfg.lloyd_max_iters < 1)
    throw std::invalid_argument("solver config fields must be >= 1");
  if (cfg.dsq_batch && *cfg.dsq_batch < 1)
    throw std::invalid_argument("dsq_batch must be >= 1");
  if (cfg.boost_rounds && *cfg.boost_rounds < 1)
    throw std::invalid_argument("boost_rounds must be >= 1");
}

Center center_at_point(const ClusterInstance& inst, int p) {
  if (inst.is_euclidean()) {
    auto x = inst.point(p);
    return Center::at(std::vector<double>(x.begin(), x.end()));
  }
  int best = 0;
  double best_d = inst.candidate_distance(p, 0);
  for (int q = 1; q < inst.candidate_count(); ++q) {
    double d = inst.candidate_distance(p, q);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return Center::of_candidate(best);
}

// min over the current centers of d(p, .)^power, per point
std::vector<double> min_power_dists(const ClusterInstance& inst,
                                    const std::vector<Center>& centers) {
  std::vector<double> w(inst.n(), std::numeric_limits<double>::infinity());
  for (const Center& c : centers) {
    for (int p = 0; p < inst.n(); ++p) w[p] = std::min(w[p], inst.center_distance_pow(p, c));
  }
  return w;
}

int weighted_draw(const std::vector<double>& w, double total, Rng& rng) {
  double u = rng.uniform() * total;
  double acc = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(w.size()) - 1;
}

std::vector<Center> seed_centers(const ClusterInstance& inst, int k, Rng& rng) {
  std::vector<Center> centers;
  centers.reserve(k);
  centers.push_back(center_at_point(inst, rng.uniform_int(0, inst.n() - 1)));
  while (static_cast<int>(centers.size()) < k) {
    std::vector<double> w = min_power_dists(inst, centers);
    double total = 0.0;
    for (double v : w) total += v;
    int pick = (total > 0.0) ? weighted_draw(w, total, rng) : rng.uniform_int(0, inst.n() - 1);
    centers.push_back(center_at_point(inst, pick));
  }
  return centers;
}

Clustering lloyd(const ClusterInstance& inst, std::vector<Center> centers,
                 const SolverConfig& cfg) {
  const int k = static_cast<int>(centers.size());
  Clustering current = assign_nearest(inst, centers);
  for (int iter = 0; iter < cfg.lloyd_max_iters; ++iter) {
    std::vector<std::vector<int>> members(k);
    for (int p = 0; p < inst.n(); ++p) members[current.labels[p] - 1].push_back(p);
    for (int i = 0; i < k; ++i) {
      if (members[i].empty()) {
        // re-seed at the point farthest from its nearest center
        int far = 0;
        double far_d = -1.0;
        for (int p = 0; p < inst.n(); ++p) {
          double d = inst.center_distance_sq(p, centers[current.labels[p] - 1]);
          if (d > far_d) {
            far_d = d;
            far = p;
          }
        }
        centers[i] = center_at_point(inst, far);
        continue;
      }
      OneCenterResult better = solve_one_center(inst, members[i]);
      if (better.cost <= cluster_cost(inst, members[i], centers[i]))
        centers[i] = std::move(better.center);
    }
    Clustering next = assign_nearest(inst, centers);
    if (next.cost > current.cost * (1.0 + 1e-9) + 1e-12)
      throw Error("lloyd iteration increased the cost");
    bool done = next.labels == current.labels || next.cost >= current.cost - 1e-12;
    current = std::move(next);
    if (done) break;
  }
  return current;
}

}  // namespace

Clustering baseline_cluster(const ClusterInstance& inst, int k, uint64_t seed,
                            const SolverConfig& cfg) {
  check_solver_config(cfg);
  if (k < 1 || k > inst.n()) throw std::invalid_argument("need 1 <= k <= n");
  Clustering best;
  bool have = false;
  for (int restart = 0; restart < cfg.alpha_restarts; ++restart) {
    Rng rng(mix_seed(seed, static_cast<uint64_t>(restart)));
    Clustering got = lloyd(inst, seed_centers(inst, k, rng), cfg);
    if (!have || got.cost < best.cost) {
      best = std::move(got);
      have = true;
    }
  }
  return best;
}

std::vector<LabeledCenter> complete_centers(const ClusterInstance& inst, OracleSession& session,
                                            std::vector<LabeledCenter> partial, int k, double eps,
                                            double delta, const SolverConfig& cfg, uint64_t seed) {
  check_solver_config(cfg);
  if (!inst.is_euclidean() || inst.power() != 2)
    throw std::invalid_argument("center completion needs a Euclidean power-2 instance");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("eps and delta must lie in (0, 1)");
  if (static_cast<int>(partial.size()) > k)
    throw std::invalid_argument("more partial centers than k");
  {
    std::vector<char> used(k + 1, 0);
    for (const auto& lc : partial) {
      inst.require_center(lc.center);
      if (lc.label < 1 || lc.label > session.discovered())
        throw std::invalid_argument("partial centers must carry established session labels");
      if (used[lc.label]) throw std::invalid_argument("duplicate partial-center label");
      used[lc.label] = 1;
    }
  }
  if (static_cast<int>(partial.size()) == k) return partial;

  const long long batch = cfg.dsq_batch ? *cfg.dsq_batch : default_dsq_batch(k, eps);
  const int rounds = cfg.boost_rounds ? *cfg.boost_rounds : default_boost_rounds(delta);

  std::vector<LabeledCenter> best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int round = 0; round < rounds; ++round) {
    Rng rng(mix_seed(seed, 0xAC05u + static_cast<uint64_t>(round)));
    std::vector<LabeledCenter> built = partial;
    std::vector<char> covered(k + 1, 0);
    for (const auto& lc : built) covered[lc.label] = 1;

    while (static_cast<int>(built.size()) < k) {
      std::vector<Center> plain;
      plain.reserve(built.size());
      for (const auto& lc : built) plain.push_back(lc.center);
      std::vector<double> w = min_power_dists(inst, plain);
      std::vector<double> prefix(w.size());
      double total = 0.0;
      for (size_t i = 0; i < w.size(); ++i) {
        total += w[i];
        prefix[i] = total;
      }

      std::map<int, std::vector<int>> hits;  // uncovered label -> sampled points
      for (long long s = 0; s < batch; ++s) {
        int p;
        if (total > 0.0) {
          double u = rng.uniform() * total;
          p = static_cast<int>(std::lower_bound(prefix.begin(), prefix.end(), u) -
                               prefix.begin());
          p = std::min(p, inst.n() - 1);
        } else {
          p = rng.uniform_int(0, inst.n() - 1);
        }
        int label = session.query_label(p);
        if (label <= k && !covered[label]) hits[label].push_back(p);
      }
      if (hits.empty())
        throw PhaseExhaustedError(
            "no sample hit an uncovered label within a batch of " + std::to_string(batch),
            built);
      int pick = 0;
      size_t pick_count = 0;
      for (const auto& [label, pts] : hits) {
        if (pts.size() > pick_count) {  // ties resolve to the smallest label
          pick = label;
          pick_count = pts.size();
        }
      }
      std::vector<double> mean(inst.dim(), 0.0);
      for (int p : hits[pick]) {
        auto x = inst.point(p);
        for (int d = 0; d < inst.dim(); ++d) mean[d] += x[d];
      }
      for (double& v : mean) v /= static_cast<double>(hits[pick].size());
      built.push_back({Center::at(std::move(mean)), pick});
      covered[pick] = 1;
    }

    std::vector<Center> plain;
    plain.reserve(built.size());
    for (const auto& lc : built) plain.push_back(lc.center);
    double cost = assign_nearest(inst, plain).cost;
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(built);
    }
  }

  std::sort(best.begin(), best.end(),
            [](const LabeledCenter& a, const LabeledCenter& b) { return a.label < b.label; });
  return best;
}

}  // namespace sskm
