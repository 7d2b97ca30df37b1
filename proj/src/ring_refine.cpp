#include "sskm/ring_refine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sskm/rng.hpp"

namespace sskm {

double ring_radius(const ClusterInstance& inst, std::span<const int> cluster, const Center& center,
                   double gamma) {
  if (cluster.empty()) throw std::invalid_argument("ring radius needs a non-empty cluster");
  if (!(gamma > 0.0 && gamma < 0.5)) throw std::invalid_argument("gamma must lie in (0, 1/2)");
  double avg = cluster_cost(inst, cluster, center) / (gamma * static_cast<double>(cluster.size()));
  return inst.power() == 2 ? std::sqrt(avg) : avg;
}

namespace {

int ring_count(int n) {
  // smallest J with 4^J >= n, i.e. ceil(log2(n) / 2), computed in integers
  int j = 0;
  long long cap = 1;
  while (cap < n) {
    cap *= 4;
    ++j;
  }
  return j;
}

}  // namespace

RingPartition partition_rings(const ClusterInstance& inst, std::span<const int> cluster,
                              const Center& center, double base_radius, int n,
                              long long* residual_count) {
  if (n < 1) throw std::invalid_argument("instance size must be >= 1");
  if (base_radius < 0.0) throw std::invalid_argument("base radius must be nonnegative");
  const int outer = ring_count(n);
  RingPartition part;
  part.base_radius = base_radius;
  part.rings.assign(outer + 1, {});
  for (int p : cluster) {
    double d = inst.center_distance(p, center);
    if (base_radius == 0.0) {
      if (d > 0.0)
        throw DegenerateRadiusError("zero base radius with a point at distance " +
                                    std::to_string(d));
      part.rings[0].push_back(p);
      continue;
    }
    int j = 0;
    double bound = base_radius;
    while (d > bound && j < outer) {
      bound *= 2.0;
      ++j;
    }
    if (d > bound) {
      // past the outermost ring: possible only through floating-point edge
      // effects or an invalid approximation factor; keep it in the last ring
      if (residual_count) ++*residual_count;
    }
    part.rings[j].push_back(p);
  }
  return part;
}

RingRunResult run_ring_refine(const ClusterInstance& inst, OracleSession& session, double eps,
                              double delta, double alpha, const RingConfig& cfg) {
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("eps and delta must lie in (0, 1)");
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  if (!(cfg.cap_factor > 0.0)) throw std::invalid_argument("cap_factor must be positive");
  const int k = inst.k();
  const int n = inst.n();

  const long long sc_before = session.same_cluster_count();
  const long long label_before = session.label_query_count();

  RingRunResult out;
  out.gamma = inst.power() == 2 ? eps * eps / (288.0 * alpha) : eps / (cfg.c_med * alpha);

  Clustering base = baseline_cluster(inst, k, mix_seed(cfg.seed, 0xA1FAu), cfg.solver);
  std::vector<std::vector<int>> members(k);
  for (int p = 0; p < n; ++p) members[base.labels[p] - 1].push_back(p);
  std::vector<Center> base_centers(k);
  for (int i = 0; i < k; ++i)
    base_centers[i] =
        members[i].empty() ? default_center(inst) : solve_one_center(inst, members[i]).center;
  out.intermediate = make_clustering(inst, base.labels, base_centers);

  const double err_param = inst.power() == 2 ? out.gamma * out.gamma : out.gamma;
  const double delta_split = delta / (k * std::max(1.0, std::log2(static_cast<double>(n))));
  long long m_formula =
      inst.is_euclidean()
          ? sample_complexity_euclidean(inst.dim(), k, err_param, delta_split, cfg.learner.scale_c)
          : sample_complexity_fms(inst.candidate_count(), k, err_param, delta_split,
                                  cfg.learner.scale_c);
  out.m_prime = std::min(m_formula, cfg.learner.max_samples);

  Rng rng(mix_seed(cfg.seed, 0x519Au));
  std::vector<int> labels_out(n, 0);
  for (int i = 0; i < k; ++i) {
    if (members[i].empty()) continue;  // no rings, no samples
    double radius = ring_radius(inst, members[i], base_centers[i], out.gamma);
    RingPartition part = partition_rings(inst, members[i], base_centers[i], radius, n,
                                         &out.report.residual_points);
    part.cluster = i + 1;
    for (int j = 0; j < static_cast<int>(part.rings.size()); ++j) {
      const std::vector<int>& ring = part.rings[j];
      if (ring.empty()) continue;
      long long used = 0;
      if (static_cast<long long>(ring.size()) <= out.m_prime) {
        // cheaper and exact: label the whole ring point by point
        for (int p : ring) labels_out[p] = session.query_label(p);
        used = static_cast<long long>(ring.size());
      } else {
        long long cap =
            static_cast<long long>(std::floor(cfg.cap_factor * static_cast<double>(ring.size())));
        long long m_ring = std::max<long long>(1, std::min(out.m_prime, cap));
        std::vector<std::pair<int, int>> sample;
        sample.reserve(m_ring);
        for (long long s = 0; s < m_ring; ++s) {
          int p = ring[rng.uniform_int(0, static_cast<int>(ring.size()) - 1)];
          sample.emplace_back(p, session.query_label(p));
        }
        used = m_ring;
        try {
          Classifier clf = train_all_pairs(inst, sample, k, cfg.learner);
          for (int p : ring) labels_out[p] = clf.predict(inst, p);
        } catch (const TrainingError& e) {
          throw TrainingError("ring (" + std::to_string(i + 1) + ", " + std::to_string(j) +
                                  "): " + e.what(),
                              e.label_a, e.label_b);
        }
      }
      out.report.rings.push_back({i + 1, j, used});
    }
    out.partitions.push_back(std::move(part));
  }

  std::vector<std::vector<int>> final_members(k);
  for (int p = 0; p < n; ++p) final_members[labels_out[p] - 1].push_back(p);
  std::vector<Center> final_centers(k);
  for (int i = 0; i < k; ++i)
    final_centers[i] = final_members[i].empty()
                           ? default_center(inst)
                           : solve_one_center(inst, final_members[i]).center;
  out.clustering = make_clustering(inst, std::move(labels_out), std::move(final_centers));

  out.report.same_cluster = session.same_cluster_count() - sc_before;
  out.report.label_queries = session.label_query_count() - label_before;
  out.report.cost = out.clustering.cost;
  return out;
}

}  // namespace sskm
