#ifndef SSKM_RING_REFINE_HPP
#define SSKM_RING_REFINE_HPP

#include <cstdint>
#include <span>

#include "sskm/core.hpp"
#include "sskm/learners.hpp"
#include "sskm/oracle.hpp"
#include "sskm/report.hpp"
#include "sskm/solvers.hpp"

namespace sskm {

/// One intermediate cluster split into an inner ball of the base radius and
/// doubling annuli: ring 0 holds points at distance <= r from the center,
/// ring j >= 1 holds distances in (2^(j-1) r, 2^j r]. Rings partition the
/// cluster; a point past the last ring (floating-point edge or an invalid
/// approximation factor) is placed in the last ring and counted.
struct RingPartition {
  int cluster = 0;  // 1-based label in the intermediate clustering
  double base_radius = 0.0;
  std::vector<std::vector<int>> rings;  // size J + 1
};

/// Base radius: sqrt(cost / (gamma |C|)) for power 2, cost / (gamma |C|) for
/// power 1. gamma must lie in (0, 1/2).
double ring_radius(const ClusterInstance& inst, std::span<const int> cluster, const Center& center,
                   double gamma);

/// J = ceil(log2(n) / 2) annuli beyond the inner ball. Throws
/// DegenerateRadiusError when the radius is 0 but some point is off-center.
RingPartition partition_rings(const ClusterInstance& inst, std::span<const int> cluster,
                              const Center& center, double base_radius, int n,
                              long long* residual_count = nullptr);

struct RingConfig {
  double c_med = 96.0;      // power-1 analogue of the 288 constant, gamma = eps / (c_med * alpha)
  double cap_factor = 1.0;  // per-ring sample cap multiplier when sampling
  LearnerConfig learner;
  SolverConfig solver;
  uint64_t seed = 0;
};

struct RingRunResult {
  Clustering clustering;
  QueryReport report;
  Clustering intermediate;  // the baseline clustering the rings refined
  std::vector<RingPartition> partitions;
  std::vector<std::pair<int, int>> labeled_samples;  // every (point, session label) queried
  double gamma = 0.0;
  long long m_prime = 0;  // per-ring sample budget after the global cap
};

/// End-to-end ring refinement: baseline clustering, per-cluster ring
/// partition with gamma = eps^2 / (288 alpha) (power 2) or
/// eps / (c_med alpha) (power 1), per-ring labeling — rings at most m' big
/// are labeled point-by-point through the session, larger rings train an
/// all-pairs classifier on m' sampled labels — and final centers from
/// solve_one_center per output label.
RingRunResult run_ring_refine(const ClusterInstance& inst, OracleSession& session, double eps,
                              double delta, double alpha, const RingConfig& cfg = {});

}  // namespace sskm

#endif  // SSKM_RING_REFINE_HPP
