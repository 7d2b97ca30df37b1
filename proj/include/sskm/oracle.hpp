#ifndef SSKM_ORACLE_HPP
#define SSKM_ORACLE_HPP

#include <iosfwd>
#include <vector>

#include "sskm/clustering.hpp"

namespace sskm {

/// Same-cluster query access to a sealed GroundTruth, with exact accounting.
///
/// query_label simulates a per-point label oracle against a growing list of
/// representatives: compare p with each representative in order, return the
/// position on the first match, append p as a new representative otherwise.
/// The returned session labels equal the true labels up to the permutation
/// fixed by first-encounter order. Once representatives exist for all k
/// clusters the final comparison is skipped (its answer is forced), so a call
/// never costs more than k - 1 same-cluster queries from that point on.
///
/// One algorithm run owns one session; sessions are movable, never shared.
class OracleSession {
 public:
  OracleSession(const ClusterInstance& inst, const GroundTruth& truth);

  /// Counts every call, including p == q. Unknown ids throw without counting.
  bool same_cluster(int p, int q);

  int query_label(int p);

  long long same_cluster_count() const { return sc_count_; }
  long long label_query_count() const { return label_count_; }
  const std::vector<int>& representatives() const { return reps_; }
  int discovered() const { return static_cast<int>(reps_.size()); }
  int k() const { return k_; }

  /// Optional newline-delimited query log: "SC p q result" / "LABEL p label".
  void set_log(std::ostream* sink) { log_ = sink; }

 private:
  const ClusterInstance* inst_;
  const GroundTruth* truth_;
  int k_;
  std::vector<int> reps_;
  long long sc_count_ = 0;
  long long label_count_ = 0;
  std::ostream* log_ = nullptr;
};

}  // namespace sskm

#endif  // SSKM_ORACLE_HPP
