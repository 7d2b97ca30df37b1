#ifndef SSKM_REPORT_HPP
#define SSKM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace sskm {

struct RingSampleCount {
  int cluster = 0;  // 1-based intermediate-cluster index
  int ring = 0;     // 0 = inner ball
  long long samples = 0;
};

/// Query accounting and run summary shared by the two refinement algorithms.
/// The fields below `accuracy` are filled only by the fast algorithm.
struct QueryReport {
  long long same_cluster = 0;
  long long label_queries = 0;
  std::vector<RingSampleCount> rings;
  double cost = 0.0;
  std::optional<double> accuracy;  // filled by the harness, needs the truth

  std::optional<int> k_prime;
  std::optional<double> opt_star;
  std::optional<double> threshold;

  // deterministic budget terms, independent of the instance size
  std::optional<long long> uniform_budget;  // step-1 sample count
  std::optional<long long> learner_budget;  // step-4 sample count
  std::optional<long long> dsq_batch;
  std::optional<int> boost_rounds;

  long long residual_points = 0;  // ring overflow placements (not serialized)
};

}  // namespace sskm

#endif  // SSKM_REPORT_HPP
