#include "sskm/oracle.hpp"

#include <ostream>
#include <stdexcept>

namespace sskm {

OracleSession::OracleSession(const ClusterInstance& inst, const GroundTruth& truth)
    : inst_(&inst), truth_(&truth), k_(truth.k()) {
  if (inst.n() != truth.n()) throw std::invalid_argument("truth does not match the instance");
}

bool OracleSession::same_cluster(int p, int q) {
  inst_->require_point(p);
  inst_->require_point(q);
  ++sc_count_;
  bool same = truth_->label(p) == truth_->label(q);
  if (log_) (*log_) << "SC " << p << ' ' << q << ' ' << (same ? 1 : 0) << '\n';
  return same;
}

int OracleSession::query_label(int p) {
  inst_->require_point(p);
  ++label_count_;
  const int known = static_cast<int>(reps_.size());
  int result = 0;
  for (int i = 0; i < known; ++i) {
    // With representatives for all k clusters, a point that missed the first
    // k-1 can only match the last one; the comparison is free.
    if (known == k_ && i == known - 1) {
      result = known;
      break;
    }
    if (same_cluster(p, reps_[i])) {
      result = i + 1;
      break;
    }
  }
  if (result == 0) {
    reps_.push_back(p);
    result = static_cast<int>(reps_.size());
  }
  if (log_) (*log_) << "LABEL " << p << ' ' << result << '\n';
  return result;
}

}  // namespace sskm
