#ifndef SSKM_CORE_HPP
#define SSKM_CORE_HPP

#include <optional>
#include <span>
#include <vector>

#include "sskm/clustering.hpp"
#include "sskm/instance.hpp"

namespace sskm {

/// Sum of d(p, center)^power over the subset; 0 for an empty subset.
double cluster_cost(const ClusterInstance& inst, std::span<const int> subset, const Center& center);

struct OneCenterOptions {
  double eps1 = 1e-3;      // approximation slack for the Euclidean power-1 case
  double move_tol = 1e-9;  // Weiszfeld stop once the center moves less than this
  int max_iters = 10000;
};

struct OneCenterResult {
  Center center;
  double cost = 0.0;
};

/// Optimal single center of a non-empty subset.
///   Euclidean power 2: exact centroid.
///   Euclidean power 1: Weiszfeld iterate, cost within (1 + eps1) of optimum.
///   Finite metric:     exhaustive argmin over candidates, smallest id on ties.
OneCenterResult solve_one_center(const ClusterInstance& inst, std::span<const int> subset,
                                 const OneCenterOptions& opt = {});

/// Minimum number of mislabeled points over all permutations of [1, k],
/// via maximum-weight matching on the k x k agreement matrix.
long long clustering_error(const std::vector<int>& labels, const std::vector<int>& reference,
                           int k);

/// Labels every point by its nearest center (1-based index, smallest index on
/// ties) and caches the cost.
Clustering assign_nearest(const ClusterInstance& inst, std::span<const Center> centers);

/// Shared strict-margin check: per-label centers are derived from the labeling
/// with solve_one_center; every point must be strictly nearest its own center.
std::optional<BoundaryViolation> find_boundary_point(const ClusterInstance& inst,
                                                     const std::vector<int>& labels, int k);

/// Deterministic filler center for labels that end up empty: centroid of all
/// points (Euclidean) or candidate 0 (finite metric).
Center default_center(const ClusterInstance& inst);

}  // namespace sskm

#endif  // SSKM_CORE_HPP
