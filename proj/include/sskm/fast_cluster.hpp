#ifndef SSKM_FAST_CLUSTER_HPP
#define SSKM_FAST_CLUSTER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sskm/core.hpp"
#include "sskm/learners.hpp"
#include "sskm/oracle.hpp"
#include "sskm/report.hpp"
#include "sskm/solvers.hpp"

namespace sskm {

/// ceil(256 k^3 / (eps^2 delta)) uniform samples; enough to hit every cluster
/// of fractional size at least eps/k often. Requires eps in (0, 1/4).
long long uniform_sample_budget(int k, double eps, double delta);

struct LargeClusterStat {
  int label = 0;  // session label
  long long samples = 0;
  std::vector<double> centroid;
};

/// Session labels drawn strictly more than (eps / 2k) * budget times in the
/// labeled sample, with the mean of their sampled points. Ordered by session
/// label (= first-encounter order). At least one label always qualifies.
std::vector<LargeClusterStat> detect_large_clusters(
    const ClusterInstance& inst, const std::vector<std::pair<int, int>>& labeled_sample, int k,
    double eps, long long budget);

struct FastConfig {
  long long sample_cap = 1000000000;  // desk-scale cap on both uniform budgets
  LearnerConfig learner;
  SolverConfig solver;
  uint64_t seed = 0;
};

struct FastRunResult {
  Clustering clustering;
  QueryReport report;
  std::vector<LabeledCenter> centers;  // completed center set, by session label
  std::vector<int> large_labels;
  double opt_star = 0.0;
  double gate_threshold = 0.0;
  std::vector<int> pac_labels;       // classifier output per point
  std::vector<uint8_t> gate_passed;  // 1 when the classifier label was kept
};

/// End-to-end n-independent-query clustering (Euclidean power 2 only).
/// Internally runs at eps' = eps/6 and delta' = delta/3: uniform labeled
/// sample, large-cluster detection, center completion, one global all-pairs
/// classifier trained on fresh uniform labels, then recoloring — a point
/// keeps its classifier label when that label is large and the point lies
/// within squared distance k * OPT* / (n eps'^3) of its completed center;
/// otherwise it takes the label of its nearest completed center. Final
/// centers are the centroids of the output clusters.
///
/// When a capped budget reaches n, all points are labeled directly instead
/// of sampling. Budgets are reported so n-independence is checkable.
FastRunResult run_fast_cluster(const ClusterInstance& inst, OracleSession& session, double eps,
                               double delta, const FastConfig& cfg = {});

}  // namespace sskm

#endif  // SSKM_FAST_CLUSTER_HPP
