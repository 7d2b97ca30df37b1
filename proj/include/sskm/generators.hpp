#ifndef SSKM_GENERATORS_HPP
#define SSKM_GENERATORS_HPP

#include <cstdint>

#include "sskm/clustering.hpp"
#include "sskm/instance.hpp"

namespace sskm {

struct GeneratedInstance {
  ClusterInstance instance;
  GroundTruth truth;
};

/// k unit-variance spherical blobs with centers at pairwise distance at least
/// `separation`, n points split as evenly as possible. Offending points are
/// resampled until the no-boundary check passes (at most 100 passes, then
/// GenerationError). Deterministic given the seed.
GeneratedInstance gen_gaussian(int k, int n, int r, double separation, uint64_t seed,
                               int power = 2);

/// The 2r-point instance {-e_1, e_1, ..., -e_r, e_r} with k = 2; the fixed
/// truth puts the positive axis points in cluster 1.
GeneratedInstance gen_hypercube(int r);

/// Finite-metric variant: points from gen_hypercube(r), candidates are the
/// deduplicated centroids of every non-empty subset of the points, distances
/// materialized into a full matrix. Memory grows as 4^r; r > 6 throws
/// ResourceLimitError.
ClusterInstance gen_fms_from_subsets(int r);

struct HypercubeOptimaReport {
  int r = 0;
  double min_cost = 0.0;
  long long optima_count = 0;      // bipartitions with the first point's side fixed
  bool all_split_pairs = false;    // every optimum separates +e_i from -e_i
  double expected_min_cost = 0.0;  // 2r - 2
  bool pass = false;
};

/// Brute-forces every bipartition of the 2r hypercube points with centroid
/// centers and checks that all minimum-cost splits separate each +-e_i pair
/// at cost 2r - 2. Requires r <= 8.
HypercubeOptimaReport verify_hypercube_optima(int r);

/// Closed-form cost of the canonical bipartition with r0 axes fully in B,
/// r1 axes split and r2 axes fully in A: 2r - (r1/(r1+2r2) + r1/(r1+2r0)),
/// with 0/0 terms read as 0. Cross-checks the verifier's arithmetic.
double hypercube_split_cost(int r0, int r1, int r2);

}  // namespace sskm

#endif  // SSKM_GENERATORS_HPP
