#ifndef SSKM_CLUSTERING_HPP
#define SSKM_CLUSTERING_HPP

#include <optional>
#include <vector>

#include "sskm/instance.hpp"

namespace sskm {

/// A complete clustering: every point carries a label in [1, k] and every
/// label owns a center. Labels with no points are allowed but still carry
/// centers. `cost` caches sum over points of d(p, center(label(p)))^power.
struct Clustering {
  std::vector<int> labels;
  std::vector<Center> centers;
  double cost = 0.0;
};

double clustering_cost(const ClusterInstance& inst, const std::vector<int>& labels,
                       const std::vector<Center>& centers);

Clustering make_clustering(const ClusterInstance& inst, std::vector<int> labels,
                           std::vector<Center> centers);

/// Recomputes the cached cost; true when it matches within rel_tol.
bool verify_cached_cost(const ClusterInstance& inst, const Clustering& c, double rel_tol = 1e-9);

struct BoundaryViolation {
  int point = -1;
  int own_label = 0;
  int other_label = 0;
};

/// The hidden optimal labeling behind the oracle. Algorithms receive only an
/// OracleSession; the eval accessors exist for scoring, validation and I/O,
/// never for algorithm code.
class GroundTruth {
 public:
  GroundTruth(std::vector<int> labels, int k);

  int n() const { return static_cast<int>(labels_.size()); }
  int k() const { return k_; }

  const std::vector<int>& labels_for_eval() const { return labels_; }
  int label_for_eval(int p) const { return labels_.at(p); }

  /// O(nk) no-boundary-points check: with per-label centers derived from this
  /// labeling, every point must be strictly closer to its own center than to
  /// any other. Returns the first violation, if any.
  std::optional<BoundaryViolation> find_boundary_point(const ClusterInstance& inst) const;

 private:
  friend class OracleSession;
  int label(int p) const { return labels_[p]; }

  std::vector<int> labels_;
  int k_;
};

}  // namespace sskm

#endif  // SSKM_CLUSTERING_HPP
