#include "sskm/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace sskm {

Classifier::Classifier(int k, std::vector<int> seen_labels,
                       std::vector<BinarySeparator> pair_separators)
    : k_(k), seen_(std::move(seen_labels)), seps_(std::move(pair_separators)) {
  if (k_ < 1) throw std::invalid_argument("k must be >= 1");
  if (seen_.empty()) throw std::invalid_argument("classifier needs at least one seen label");
  if (seps_.size() != static_cast<size_t>(k_) * k_)
    throw std::invalid_argument("expected a k*k separator table");
}

const BinarySeparator& Classifier::separator(int a, int b) const {
  if (a < 1 || a > k_ || b < 1 || b > k_ || a == b)
    throw std::invalid_argument("separator(a, b) needs distinct labels in [1, k]");
  return seps_[static_cast<size_t>(a - 1) * k_ + (b - 1)];
}

namespace {

template <typename Eval>
int vote_argmax(int k, Eval&& eval) {
  int best_label = 1;
  int best_score = std::numeric_limits<int>::min();
  for (int a = 1; a <= k; ++a) {
    int score = 0;
    for (int b = 1; b <= k; ++b) {
      if (b == a) continue;
      score += eval(a, b);
    }
    if (score > best_score) {
      best_score = score;
      best_label = a;
    }
  }
  return best_label;
}

}  // namespace

int Classifier::predict(const ClusterInstance& inst, int point) const {
  inst.require_point(point);
  return vote_argmax(k_, [&](int a, int b) { return separator(a, b).eval(inst, point); });
}

int Classifier::predict_coords(const ClusterInstance& inst, std::span<const double> x) const {
  if (!inst.is_euclidean())
    throw std::invalid_argument("coordinate prediction needs a Euclidean instance");
  if (static_cast<int>(x.size()) != inst.dim())
    throw std::invalid_argument("dimension mismatch");
  return vote_argmax(k_, [&](int a, int b) { return separator(a, b).eval_coords(x); });
}

namespace {

BinarySeparator negate_separator(const BinarySeparator& s) {
  BinarySeparator out = s;
  switch (s.kind) {
    case BinarySeparator::Kind::kConstant:
      out.constant = -s.constant;
      break;
    case BinarySeparator::Kind::kHalfspace:
      for (double& v : out.w) v = -v;
      out.b = -s.b;
      break;
    case BinarySeparator::Kind::kCandidatePair:
      std::swap(out.q1, out.q2);
      break;
  }
  return out;
}

}  // namespace

Classifier train_all_pairs(const ClusterInstance& inst,
                           std::span<const std::pair<int, int>> samples, int k,
                           const LearnerConfig& cfg) {
  if (samples.empty()) throw std::invalid_argument("training needs at least one sample");
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  std::vector<std::vector<int>> by_label(k + 1);
  for (const auto& [p, label] : samples) {
    inst.require_point(p);
    if (label < 1 || label > k) throw std::invalid_argument("sample label out of range");
    by_label[label].push_back(p);
  }
  std::vector<int> seen;
  for (int a = 1; a <= k; ++a)
    if (!by_label[a].empty()) seen.push_back(a);

  std::vector<std::vector<std::vector<double>>> coords(k + 1);
  if (inst.is_euclidean()) {
    for (int a : seen) {
      coords[a].reserve(by_label[a].size());
      for (int p : by_label[a]) {
        auto x = inst.point(p);
        coords[a].emplace_back(x.begin(), x.end());
      }
    }
  }

  std::vector<BinarySeparator> table(static_cast<size_t>(k) * k);
  auto slot = [&](int a, int b) -> BinarySeparator& {
    return table[static_cast<size_t>(a - 1) * k + (b - 1)];
  };
  std::vector<char> is_seen(k + 1, 0);
  for (int a : seen) is_seen[a] = 1;

  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= k; ++b) {
      if (a == b) continue;
      if (!is_seen[a]) {
        slot(a, b) = BinarySeparator::constant_of(-1);
        continue;
      }
      if (!is_seen[b]) {
        slot(a, b) = BinarySeparator::constant_of(1);
        continue;
      }
      if (cfg.antisymmetric_pairs && a > b) {
        slot(a, b) = negate_separator(slot(b, a));
        continue;
      }
      try {
        slot(a, b) = inst.is_euclidean()
                         ? fit_separator_euclidean(coords[a], coords[b], cfg)
                         : fit_separator_fms(inst, by_label[a], by_label[b]);
      } catch (const NonSeparableError& e) {
        throw TrainingError("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") is not separable: " + e.what(),
                            a, b);
      }
    }
  }
  return Classifier(k, std::move(seen), std::move(table));
}

namespace {

constexpr long long kComplexityMax = 4000000000000000000LL;

long long to_count(double v) {
  if (!(v > 0.0)) return 1;
  if (v >= static_cast<double>(kComplexityMax)) return kComplexityMax;
  return std::max<long long>(1, static_cast<long long>(std::ceil(v)));
}

void check_complexity_args(int k, double eps, double delta, double scale_c) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(scale_c > 0.0)) throw std::invalid_argument("scale constant must be positive");
}

}  // namespace

long long sample_complexity_euclidean(int r, int k, double eps, double delta, double scale_c) {
  check_complexity_args(k, eps, delta, scale_c);
  if (r < 1) throw std::invalid_argument("dimension must be >= 1");
  const double kk_r = static_cast<double>(k) * k * r;
  const double lead = kk_r * std::log(kk_r) * std::log(static_cast<double>(k) * k * k * r / eps);
  return to_count(scale_c * (lead + std::log(1.0 / delta)) / eps);
}

long long sample_complexity_fms(long long q_size, int k, double eps, double delta,
                                double scale_c) {
  check_complexity_args(k, eps, delta, scale_c);
  if (q_size < 1) throw std::invalid_argument("candidate count must be >= 1");
  const double lead = static_cast<double>(k) * k * std::log(static_cast<double>(k)) *
                      std::log(static_cast<double>(q_size)) *
                      (std::log(static_cast<double>(k)) + std::log(1.0 / eps));
  return to_count(scale_c * (lead + std::log(1.0 / delta)) / eps);
}

}  // namespace sskm
