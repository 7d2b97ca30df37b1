#ifndef SSKM_TESTS_TEST_UTIL_HPP
#define SSKM_TESTS_TEST_UTIL_HPP

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sskm/core.hpp"
#include "sskm/instance.hpp"
#include "sskm/rng.hpp"

namespace sskm_test {

// Minimum mislabel count by trying every label permutation (k <= 8).
inline long long exhaustive_error(const std::vector<int>& labels, const std::vector<int>& truth,
                                  int k) {
  if (labels.size() != truth.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  long long best = static_cast<long long>(labels.size());
  do {
    long long wrong = 0;
    for (size_t p = 0; p < labels.size(); ++p)
      if (perm[labels[p] - 1] != truth[p]) ++wrong;
    best = std::min(best, wrong);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Euclidean distance matrix over the listed points (points first, then any
// extra rows meant as candidates).
inline std::vector<std::vector<double>> euclid_matrix_of(
    const std::vector<std::vector<double>>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (size_t i = 0; i < pts[a].size(); ++i)
        s += (pts[a][i] - pts[b][i]) * (pts[a][i] - pts[b][i]);
      d[a][b] = std::sqrt(s);
    }
  return d;
}

// Finite-metric instance whose truth is the strict Voronoi partition of the
// first k candidates; redraws until no point ties between those candidates.
struct FmsCorpus {
  sskm::ClusterInstance instance;
  std::vector<int> truth;
};

inline FmsCorpus random_fms_corpus(int n, int q, int k, sskm::Rng& rng) {
  for (;;) {
    std::vector<std::vector<double>> all(n + q, std::vector<double>(3));
    for (auto& p : all)
      for (auto& v : p) v = rng.uniform_in(-10.0, 10.0);
    auto inst = sskm::ClusterInstance::finite_metric(n, euclid_matrix_of(all), k, 2);
    std::vector<int> truth(n);
    bool tie = false;
    for (int p = 0; p < n && !tie; ++p) {
      int best = 0;
      double best_d = inst.candidate_distance(p, 0);
      for (int c = 1; c < k; ++c) {
        double d = inst.candidate_distance(p, c);
        if (std::abs(d - best_d) < 1e-9) tie = true;
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      truth[p] = best + 1;
    }
    if (!tie) return {std::move(inst), std::move(truth)};
  }
}

// True optimal 2-clustering cost by enumerating every bipartition (n <= 20).
inline double brute_force_two_means(const sskm::ClusterInstance& inst) {
  const int n = inst.n();
  if (n > 20) throw std::invalid_argument("too many points for brute force");
  double best = std::numeric_limits<double>::infinity();
  for (unsigned long long mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    unsigned long long full = (mask << 1) | 1ULL;
    std::vector<int> a, b;
    for (int p = 0; p < n; ++p) ((full >> p) & 1ULL ? a : b).push_back(p);
    double cost = 0.0;
    if (!a.empty()) cost += sskm::solve_one_center(inst, a).cost;
    if (!b.empty()) cost += sskm::solve_one_center(inst, b).cost;
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace sskm_test

#endif  // SSKM_TESTS_TEST_UTIL_HPP
