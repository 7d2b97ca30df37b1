#ifndef SSKM_LEARNERS_HPP
#define SSKM_LEARNERS_HPP

#include <span>
#include <utility>
#include <vector>

#include "sskm/errors.hpp"
#include "sskm/instance.hpp"

namespace sskm {

struct LearnerConfig {
  double scale_c = 1.0;             // explicit constant over the sample-complexity formulas
  long long max_samples = 100000;   // hard cap for desk-scale runs
  bool antisymmetric_pairs = false;  // reuse g(a,b) as -g(b,a) instead of refitting
  int max_epochs = 500;             // first-order budget per pairwise fit
  long long lp_max_points = 600;    // exact-fallback input size limit
};

/// One binary vote g(a,b): +1 means "looks like a", -1 means "looks like b".
/// Euclidean separators are halfspaces sign(<w,x> + b); finite-metric ones are
/// candidate pairs voting -1 iff d(p, q1) >= d(p, q2). Constants back the
/// unseen-label pairs.
struct BinarySeparator {
  enum class Kind { kConstant, kHalfspace, kCandidatePair };

  Kind kind = Kind::kConstant;
  int constant = 1;
  std::vector<double> w;
  double b = 0.0;
  int q1 = -1;
  int q2 = -1;

  int eval(const ClusterInstance& inst, int point) const;
  int eval_coords(std::span<const double> x) const;  // halfspace / constant only

  static BinarySeparator constant_of(int sign) {
    BinarySeparator s;
    s.kind = Kind::kConstant;
    s.constant = sign;
    return s;
  }
};

/// All-pairs voting classifier: predict(x) = argmax over labels a of
/// sum over b != a of g(a,b)(x), smallest label on ties. Labels never seen in
/// training carry constant votes that keep them strictly below every seen
/// label, so predictions stay inside the seen set.
class Classifier {
 public:
  Classifier(int k, std::vector<int> seen_labels, std::vector<BinarySeparator> pair_separators);

  int k() const { return k_; }
  const std::vector<int>& seen_labels() const { return seen_; }
  const BinarySeparator& separator(int a, int b) const;

  int predict(const ClusterInstance& inst, int point) const;
  int predict_coords(const ClusterInstance& inst, std::span<const double> x) const;

 private:
  int k_;
  std::vector<int> seen_;
  std::vector<BinarySeparator> seps_;  // index (a-1)*k + (b-1), a != b
};

/// Fits one zero-training-error separator per ordered pair of seen labels and
/// installs constant votes for unseen ones. Duplicate samples are kept.
/// Throws TrainingError naming the pair when a fit cannot reach zero error.
Classifier train_all_pairs(const ClusterInstance& inst,
                           std::span<const std::pair<int, int>> samples, int k,
                           const LearnerConfig& cfg = {});

/// Hard separation of two point sets by a halfspace: first-order passes with
/// an exact linear-feasibility fallback. Throws NonSeparableError when the
/// fallback certifies infeasibility.
BinarySeparator fit_separator_euclidean(std::span<const std::vector<double>> positives,
                                        std::span<const std::vector<double>> negatives,
                                        const LearnerConfig& cfg = {});

/// First zero-error candidate pair in lexicographic (q1, q2) order.
BinarySeparator fit_separator_fms(const ClusterInstance& inst, std::span<const int> positives,
                                  std::span<const int> negatives);

/// ceil(C * (k^2 r ln(k^2 r) ln(k^3 r / eps) + ln(1/delta)) / eps), minimum 1.
long long sample_complexity_euclidean(int r, int k, double eps, double delta,
                                      double scale_c = 1.0);

/// ceil(C * (k^2 ln(k) ln(|Q|) (ln(k) + ln(1/eps)) + ln(1/delta)) / eps), minimum 1.
long long sample_complexity_fms(long long q_size, int k, double eps, double delta,
                                double scale_c = 1.0);

}  // namespace sskm

#endif  // SSKM_LEARNERS_HPP
