#ifndef SSKM_SOLVERS_HPP
#define SSKM_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sskm/core.hpp"
#include "sskm/errors.hpp"
#include "sskm/oracle.hpp"

namespace sskm {

struct SolverConfig {
  int alpha_restarts = 5;
  int lloyd_max_iters = 100;
  std::optional<long long> dsq_batch;  // default ceil(64 k^3 / eps^2)
  std::optional<int> boost_rounds;     // default ceil(4 ln(1/delta))
};

/// Unsupervised baseline: distance-power-weighted seeding followed by Lloyd
/// alternation (assign_nearest + solve_one_center) to local convergence, best
/// of alpha_restarts seeded restarts. Deterministic given the seed; the cost
/// never exceeds the seeding cost and is nonincreasing across iterations.
Clustering baseline_cluster(const ClusterInstance& inst, int k, uint64_t seed,
                            const SolverConfig& cfg = {});

struct LabeledCenter {
  Center center;
  int label = 0;  // session label
};

/// A completion phase drew a full batch without hitting any uncovered label.
class PhaseExhaustedError : public Error {
 public:
  PhaseExhaustedError(const std::string& msg, std::vector<LabeledCenter> partial)
      : Error(msg), partial_progress(std::move(partial)) {}
  std::vector<LabeledCenter> partial_progress;
};

/// Completes a partial center set to k centers, one per session label.
/// Each phase draws dsq_batch points with probability proportional to the
/// squared distance to the current centers, labels them through the session,
/// picks the most-sampled uncovered label and centers it at the sample mean
/// of its points. boost_rounds independent rounds run back-to-back on the
/// shared session; the round whose completed set has the minimum
/// nearest-assignment cost wins. Incoming centers are returned unmodified.
///
/// Euclidean power-2 instances only. Partial centers must carry session
/// labels that the session has already issued.
std::vector<LabeledCenter> complete_centers(const ClusterInstance& inst, OracleSession& session,
                                            std::vector<LabeledCenter> partial, int k, double eps,
                                            double delta, const SolverConfig& cfg = {},
                                            uint64_t seed = 0);

long long default_dsq_batch(int k, double eps);
int default_boost_rounds(double delta);

}  // namespace sskm

#endif  // SSKM_SOLVERS_HPP
