#include "sskm/fast_cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "sskm/rng.hpp"

namespace sskm {

long long uniform_sample_budget(int k, double eps, double delta) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0.0 && eps < 0.25)) throw std::invalid_argument("eps must lie in (0, 1/4)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  double v = 256.0 * k * k * k / (eps * eps * delta);
  constexpr double kMax = 4e18;
  if (v >= kMax) return static_cast<long long>(kMax);
  return static_cast<long long>(std::ceil(v));
}

std::vector<LargeClusterStat> detect_large_clusters(
    const ClusterInstance& inst, const std::vector<std::pair<int, int>>& labeled_sample, int k,
    double eps, long long budget) {
  if (!inst.is_euclidean()) throw std::invalid_argument("large-cluster centroids need coordinates");
  if (labeled_sample.empty()) throw std::invalid_argument("empty labeled sample");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");

  std::map<int, std::pair<long long, std::vector<double>>> acc;  // label -> (count, coord sum)
  for (const auto& [p, label] : labeled_sample) {
    inst.require_point(p);
    if (label < 1 || label > k) throw std::invalid_argument("session label out of range");
    auto& slot = acc[label];
    if (slot.second.empty()) slot.second.assign(inst.dim(), 0.0);
    slot.first += 1;
    auto x = inst.point(p);
    for (int d = 0; d < inst.dim(); ++d) slot.second[d] += x[d];
  }

  const double threshold = eps / (2.0 * k) * static_cast<double>(budget);
  std::vector<LargeClusterStat> out;
  for (auto& [label, slot] : acc) {
    if (static_cast<double>(slot.first) > threshold) {
      LargeClusterStat s;
      s.label = label;
      s.samples = slot.first;
      s.centroid = slot.second;
      for (double& v : s.centroid) v /= static_cast<double>(slot.first);
      out.push_back(std::move(s));
    }
  }
  if (out.empty()) throw Error("no label cleared the large-cluster threshold");
  return out;
}

FastRunResult run_fast_cluster(const ClusterInstance& inst, OracleSession& session, double eps,
                               double delta, const FastConfig& cfg) {
  if (!inst.is_euclidean() || inst.power() != 2)
    throw std::invalid_argument("fast clustering needs a Euclidean power-2 instance");
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("eps and delta must lie in (0, 1)");
  if (cfg.sample_cap < 1) throw std::invalid_argument("sample_cap must be >= 1");

  const int k = inst.k();
  const int n = inst.n();
  const double eps_in = eps / 6.0;
  const double delta_in = delta / 3.0;
  const long long sc_before = session.same_cluster_count();
  const long long label_before = session.label_query_count();

  FastRunResult out;
  Rng rng(mix_seed(cfg.seed, 0xFA57u));

  // step 1: uniform labeled sample
  const long long q1 = std::min(uniform_sample_budget(k, eps_in, delta_in), cfg.sample_cap);
  std::vector<std::pair<int, int>> sample;
  if (q1 >= n) {
    // the budget covers the instance; labeling everything once is exact and cheaper
    sample.reserve(n);
    for (int p = 0; p < n; ++p) sample.emplace_back(p, session.query_label(p));
  } else {
    sample.reserve(q1);
    for (long long s = 0; s < q1; ++s) {
      int p = rng.uniform_int(0, n - 1);
      sample.emplace_back(p, session.query_label(p));
    }
  }

  // step 2: large labels and their sample centroids
  std::vector<LargeClusterStat> large =
      detect_large_clusters(inst, sample, k, eps_in, static_cast<long long>(sample.size()));
  std::vector<LabeledCenter> partial;
  partial.reserve(large.size());
  for (auto& s : large) {
    out.large_labels.push_back(s.label);
    partial.push_back({Center::at(s.centroid), s.label});
  }

  // step 3: complete the center set and price the nearest-center clustering
  out.centers = complete_centers(inst, session, std::move(partial), k, eps_in, delta_in,
                                 cfg.solver, mix_seed(cfg.seed, 0xC057u));
  std::vector<Center> by_label(k);
  {
    std::vector<char> seen_label(k + 1, 0);
    for (const auto& lc : out.centers) {
      if (lc.label < 1 || lc.label > k || seen_label[lc.label])
        throw Error("completed centers must cover labels 1..k exactly once");
      seen_label[lc.label] = 1;
      by_label[lc.label - 1] = lc.center;
    }
  }
  Clustering nearest = assign_nearest(inst, by_label);
  out.opt_star = nearest.cost;
  out.gate_threshold = k * out.opt_star / (n * eps_in * eps_in * eps_in);

  // step 4: one global classifier on fresh uniform labels
  const long long q3 =
      std::min({sample_complexity_euclidean(inst.dim(), k, std::pow(eps_in, 4) / k, delta_in,
                                            cfg.learner.scale_c),
                cfg.sample_cap, cfg.learner.max_samples});
  std::vector<std::pair<int, int>> fresh;
  if (q3 >= n) {
    fresh.reserve(n);
    for (int p = 0; p < n; ++p) fresh.emplace_back(p, session.query_label(p));
  } else {
    fresh.reserve(q3);
    for (long long s = 0; s < q3; ++s) {
      int p = rng.uniform_int(0, n - 1);
      fresh.emplace_back(p, session.query_label(p));
    }
  }
  Classifier clf = train_all_pairs(inst, fresh, k, cfg.learner);

  // step 5: recolor through the distance gate, nearest center as fallback
  std::vector<char> is_large(k + 1, 0);
  for (int lab : out.large_labels) is_large[lab] = 1;
  out.pac_labels.resize(n);
  out.gate_passed.assign(n, 0);
  std::vector<int> labels_out(n, 0);
  for (int p = 0; p < n; ++p) {
    int pac = clf.predict(inst, p);
    out.pac_labels[p] = pac;
    if (is_large[pac] && inst.center_distance_sq(p, by_label[pac - 1]) <= out.gate_threshold) {
      labels_out[p] = pac;
      out.gate_passed[p] = 1;
    } else {
      labels_out[p] = nearest.labels[p];
    }
  }

  // final centers: centroid per output cluster, completed center if empty
  std::vector<std::vector<int>> members(k);
  for (int p = 0; p < n; ++p) members[labels_out[p] - 1].push_back(p);
  std::vector<Center> final_centers(k);
  for (int i = 0; i < k; ++i)
    final_centers[i] =
        members[i].empty() ? by_label[i] : solve_one_center(inst, members[i]).center;
  out.clustering = make_clustering(inst, std::move(labels_out), std::move(final_centers));

  out.report.same_cluster = session.same_cluster_count() - sc_before;
  out.report.label_queries = session.label_query_count() - label_before;
  out.report.cost = out.clustering.cost;
  out.report.k_prime = static_cast<int>(out.large_labels.size());
  out.report.opt_star = out.opt_star;
  out.report.threshold = out.gate_threshold;
  out.report.uniform_budget = q1;
  out.report.learner_budget = q3;
  out.report.dsq_batch =
      cfg.solver.dsq_batch ? *cfg.solver.dsq_batch : default_dsq_batch(k, eps_in);
  out.report.boost_rounds =
      cfg.solver.boost_rounds ? *cfg.solver.boost_rounds : default_boost_rounds(delta_in);
  return out;
}

}  // namespace sskm
