#include "sskm/clustering.hpp"

#include <cmath>
#include <stdexcept>

#include "sskm/core.hpp"

namespace sskm {

double clustering_cost(const ClusterInstance& inst, const std::vector<int>& labels,
                       const std::vector<Center>& centers) {
  if (static_cast<int>(labels.size()) != inst.n())
    throw std::invalid_argument("labeling must cover every point");
  const int k = static_cast<int>(centers.size());
  for (const Center& c : centers) inst.require_center(c);
  double total = 0.0;
  for (int p = 0; p < inst.n(); ++p) {
    int lab = labels[p];
    if (lab < 1 || lab > k) throw std::invalid_argument("label out of range");
    total += inst.center_distance_pow(p, centers[lab - 1]);
  }
  return total;
}

Clustering make_clustering(const ClusterInstance& inst, std::vector<int> labels,
                           std::vector<Center> centers) {
  Clustering c;
  c.cost = clustering_cost(inst, labels, centers);
  c.labels = std::move(labels);
  c.centers = std::move(centers);
  return c;
}

bool verify_cached_cost(const ClusterInstance& inst, const Clustering& c, double rel_tol) {
  double fresh = clustering_cost(inst, c.labels, c.centers);
  return std::abs(fresh - c.cost) <= rel_tol * std::max(1.0, std::abs(fresh));
}

GroundTruth::GroundTruth(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("k must be >= 1");
  if (labels_.empty()) throw std::invalid_argument("truth labeling must be non-empty");
  for (int lab : labels_)
    if (lab < 1 || lab > k_) throw std::invalid_argument("truth label out of range");
}

std::optional<BoundaryViolation> GroundTruth::find_boundary_point(
    const ClusterInstance& inst) const {
  if (inst.n() != n()) throw std::invalid_argument("truth does not match the instance");
  return sskm::find_boundary_point(inst, labels_, k_);
}

}  // namespace sskm
