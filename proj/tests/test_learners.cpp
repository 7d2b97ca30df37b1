#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "sskm/generators.hpp"
#include "sskm/io.hpp"
#include "sskm/learners.hpp"
#include "sskm/oracle.hpp"
#include "sskm/rng.hpp"
#include "test_util.hpp"

using namespace sskm;

namespace {

using sskm_test::euclid_matrix_of;
using sskm_test::random_fms_corpus;

}  // namespace

TEST_CASE("euclidean separator fit: worked cases") {
  LearnerConfig cfg;
  std::vector<std::vector<double>> pos{{1.0, 0.0}}, neg{{-1.0, 0.0}};
  auto sep = fit_separator_euclidean(pos, neg, cfg);
  CHECK(sep.eval_coords(pos[0]) == 1);
  CHECK(sep.eval_coords(neg[0]) == -1);

  // 1-d threshold must land strictly between the classes
  std::vector<std::vector<double>> p1{{2.0}, {3.0}}, n1{{0.0}, {1.0}};
  auto s1 = fit_separator_euclidean(p1, n1, cfg);
  REQUIRE(s1.kind == BinarySeparator::Kind::kHalfspace);
  double threshold = -s1.b / s1.w[0];
  CHECK(s1.w[0] > 0.0);
  CHECK(threshold > 1.0);
  CHECK(threshold < 2.0);

  // one-sided input degenerates to a constant vote
  CHECK(fit_separator_euclidean(p1, {}, cfg).constant == 1);
  CHECK(fit_separator_euclidean({}, n1, cfg).constant == -1);
  CHECK_THROWS_AS(fit_separator_euclidean({}, {}, cfg), std::invalid_argument);
}

TEST_CASE("non-separable inputs are certified, not mislabeled") {
  LearnerConfig cfg;
  std::vector<std::vector<double>> pos{{0.0, 0.0}, {1.0, 1.0}}, neg{{0.0, 1.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(fit_separator_euclidean(pos, neg, cfg), NonSeparableError);

  // the same point on both sides can never be split
  std::vector<std::vector<double>> p2{{2.0, 2.0}}, n2{{2.0, 2.0}};
  CHECK_THROWS_AS(fit_separator_euclidean(p2, n2, cfg), NonSeparableError);
}

TEST_CASE("the exact fallback solves fits the first-order pass gives up on") {
  LearnerConfig cfg;
  cfg.max_epochs = 1;  // starve the perceptron so the feasibility solver runs
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = rng.uniform_int(1, 5);
    std::vector<double> w(dim);
    for (auto& v : w) v = rng.uniform_in(-1.0, 1.0);
    double b = rng.uniform_in(-0.5, 0.5);
    std::vector<std::vector<double>> pos, neg;
    while (pos.size() < 8 || neg.size() < 8) {
      std::vector<double> x(dim);
      for (auto& v : x) v = rng.uniform_in(-3.0, 3.0);
      double margin = b;
      for (int d = 0; d < dim; ++d) margin += w[d] * x[d];
      if (margin > 0.05)
        pos.push_back(x);
      else if (margin < -0.05)
        neg.push_back(x);
    }
    auto sep = fit_separator_euclidean(pos, neg, cfg);
    for (const auto& x : pos) CHECK(sep.eval_coords(x) == 1);
    for (const auto& x : neg) CHECK(sep.eval_coords(x) == -1);
  }
}

TEST_CASE("separator margin on training data is strictly positive") {
  Rng rng(17);
  LearnerConfig cfg;
  for (int trial = 0; trial < 30; ++trial) {
    int dim = rng.uniform_int(1, 4);
    std::vector<std::vector<double>> pos, neg;
    double gap = rng.uniform_in(1.1, 3.0);  // coords stay in [-1, 1], so this separates
    for (int i = 0; i < 12; ++i) {
      std::vector<double> a(dim), b(dim);
      for (int d = 0; d < dim; ++d) {
        a[d] = rng.uniform_in(-1.0, 1.0);
        b[d] = rng.uniform_in(-1.0, 1.0);
      }
      a[0] += gap;
      b[0] -= gap;
      pos.push_back(a);
      neg.push_back(b);
    }
    auto sep = fit_separator_euclidean(pos, neg, cfg);
    double min_margin = 1e300;
    auto value = [&](const std::vector<double>& x) {
      double s = sep.b;
      for (size_t d = 0; d < x.size(); ++d) s += sep.w[d] * x[d];
      return s;
    };
    for (const auto& x : pos) min_margin = std::min(min_margin, value(x));
    for (const auto& x : neg) min_margin = std::min(min_margin, -value(x));
    CHECK(min_margin > 0.0);
  }
}

TEST_CASE("finite-metric separator: first zero-error pair, certified failure") {
  Rng rng(7);
  auto corpus = random_fms_corpus(40, 8, 2, rng);
  std::vector<int> pos, neg;
  for (int p = 0; p < 40; ++p) (corpus.truth[p] == 1 ? pos : neg).push_back(p);
  auto sep = fit_separator_fms(corpus.instance, pos, neg);
  for (int p : pos) CHECK(sep.eval(corpus.instance, p) == 1);
  for (int p : neg) CHECK(sep.eval(corpus.instance, p) == -1);

  // |Q| = 1: only the (0, 0) pair exists and it votes -1 everywhere
  auto one_q = ClusterInstance::finite_metric(2, euclid_matrix_of({{0.0}, {1.0}, {0.4}}), 2, 2);
  auto forced = fit_separator_fms(one_q, {}, std::vector<int>{0, 1});
  CHECK(forced.q1 == 0);
  CHECK(forced.q2 == 0);
  CHECK_THROWS_AS(fit_separator_fms(one_q, std::vector<int>{0}, std::vector<int>{1}),
                  NonSeparableError);

  // two points with identical distance rows cannot get different labels
  std::vector<std::vector<double>> mirrored{{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}, {1.0, -1.0}};
  auto twin = ClusterInstance::finite_metric(2, euclid_matrix_of(mirrored), 2, 2);
  CHECK_THROWS_AS(fit_separator_fms(twin, std::vector<int>{0}, std::vector<int>{1}),
                  NonSeparableError);
}

TEST_CASE("train_all_pairs: single label, two points, non-inventiveness") {
  auto line = ClusterInstance::euclidean({{-1.0}, {1.0}, {3.0}}, 3, 2);

  std::vector<std::pair<int, int>> mono{{0, 2}, {1, 2}};
  auto clf0 = train_all_pairs(line, mono, 3);
  for (int p = 0; p < 3; ++p) CHECK(clf0.predict(line, p) == 2);

  std::vector<std::pair<int, int>> two{{0, 1}, {1, 2}};
  auto clf1 = train_all_pairs(line, two, 2);
  CHECK(clf1.predict(line, 0) == 1);
  CHECK(clf1.predict(line, 1) == 2);

  // labels {1, 2} out of k = 3: label 3 never appears in predictions
  auto clf2 = train_all_pairs(line, two, 3);
  for (int p = 0; p < 3; ++p) {
    int lab = clf2.predict(line, p);
    CHECK(lab >= 1);
    CHECK(lab <= 2);
  }

  std::vector<std::pair<int, int>> clash{{0, 1}, {0, 2}};
  CHECK_THROWS_AS(train_all_pairs(line, clash, 2), TrainingError);
  CHECK_THROWS_AS(train_all_pairs(line, {}, 2), std::invalid_argument);
}

TEST_CASE("zero sample error and non-inventiveness over random corpora") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int k = rng.uniform_int(2, 5);
    int r = rng.uniform_int(1, 5);
    auto made = gen_gaussian(k, 60, r, 12.0, 1000 + trial);
    OracleSession session(made.instance, made.truth);
    int keep = rng.uniform_int(1, k);  // restrict training to a label subset
    std::vector<std::pair<int, int>> samples;
    std::set<int> seen;
    for (int p = 0; p < made.instance.n(); ++p) {
      int lab = session.query_label(p);
      if (lab <= keep) {
        samples.emplace_back(p, lab);
        seen.insert(lab);
      }
    }
    if (samples.empty()) continue;
    auto clf = train_all_pairs(made.instance, samples, k);
    for (const auto& [p, lab] : samples) CHECK(clf.predict(made.instance, p) == lab);
    for (int p = 0; p < made.instance.n(); ++p) CHECK(seen.count(clf.predict(made.instance, p)));
  }
  for (int trial = 0; trial < 50; ++trial) {
    int k = rng.uniform_int(2, 5);
    auto corpus = random_fms_corpus(50, rng.uniform_int(k, 30), k, rng);
    std::vector<std::pair<int, int>> samples;
    std::set<int> seen;
    int keep = rng.uniform_int(1, k);
    for (int p = 0; p < 50; ++p) {
      if (corpus.truth[p] <= keep && rng.uniform() < 0.7) {
        samples.emplace_back(p, corpus.truth[p]);
        seen.insert(corpus.truth[p]);
      }
    }
    if (samples.empty()) continue;
    auto clf = train_all_pairs(corpus.instance, samples, k);
    for (const auto& [p, lab] : samples) CHECK(clf.predict(corpus.instance, p) == lab);
    for (int p = 0; p < 50; ++p) CHECK(seen.count(clf.predict(corpus.instance, p)));
  }
}

TEST_CASE("antisymmetric pair reuse reproduces the training labels") {
  auto made = gen_gaussian(3, 90, 2, 10.0, 4242);
  OracleSession session(made.instance, made.truth);
  std::vector<std::pair<int, int>> samples;
  for (int p = 0; p < 90; p += 2) samples.emplace_back(p, session.query_label(p));
  LearnerConfig cfg;
  cfg.antisymmetric_pairs = true;
  auto clf = train_all_pairs(made.instance, samples, 3, cfg);
  for (const auto& [p, lab] : samples) CHECK(clf.predict(made.instance, p) == lab);
}

TEST_CASE("sample-complexity formulas: golden values and monotonicity") {
  CHECK(sample_complexity_euclidean(2, 2, 0.1, 0.1, 1.0) == 868);
  CHECK(sample_complexity_fms(16, 4, 0.1, 0.1, 1.0) == 2292);

  // k = 1 collapses the finite-metric lead term to the confidence part
  CHECK(sample_complexity_fms(16, 1, 0.1, 0.1, 1.0) ==
        static_cast<long long>(std::ceil(std::log(10.0) / 0.1)));

  CHECK(sample_complexity_euclidean(2, 2, 0.05, 0.1) >= sample_complexity_euclidean(2, 2, 0.1, 0.1));
  CHECK(sample_complexity_euclidean(2, 2, 0.1, 0.05) >= sample_complexity_euclidean(2, 2, 0.1, 0.1));
  CHECK(sample_complexity_fms(32, 4, 0.1, 0.1) >= sample_complexity_fms(16, 4, 0.1, 0.1));

  CHECK_THROWS_AS(sample_complexity_euclidean(0, 2, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(sample_complexity_euclidean(2, 2, 1.5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(sample_complexity_euclidean(2, 2, 0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_complexity_fms(0, 2, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("classifier serialization carries seen labels and pair parameters") {
  auto line = ClusterInstance::euclidean({{-1.0}, {1.0}, {3.0}}, 3, 2);
  std::vector<std::pair<int, int>> two{{0, 1}, {1, 2}};
  auto clf = train_all_pairs(line, two, 3);
  auto j = classifier_to_json(clf);
  CHECK(j.at("k") == 3);
  CHECK(j.at("seen") == std::vector<int>{1, 2});
  CHECK(j.at("separators").size() == 6);  // ordered pairs of k = 3
  bool found_halfspace = false, found_constant = false;
  for (const auto& e : j.at("separators")) {
    if (e.at("kind") == "halfspace") found_halfspace = true;
    if (e.at("kind") == "constant") found_constant = true;
  }
  CHECK(found_halfspace);
  CHECK(found_constant);
}

TEST_CASE("test error does not trend upward as the sample grows") {
  const std::vector<int> sizes{10, 40, 160, 640};
  std::vector<double> avg(sizes.size(), 0.0);
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    auto made = gen_gaussian(3, 2000, 2, 6.0, 7000 + s);
    Rng rng(500 + s);
    for (size_t i = 0; i < sizes.size(); ++i) {
      OracleSession session(made.instance, made.truth);
      std::vector<std::pair<int, int>> samples;
      for (int t = 0; t < sizes[i]; ++t) {
        int p = rng.uniform_int(0, 1999);
        samples.emplace_back(p, session.query_label(p));
      }
      auto clf = train_all_pairs(made.instance, samples, 3);
      long long wrong = 0;
      for (int p = 0; p < 2000; ++p) {
        int lab = clf.predict(made.instance, p);
        int expect = session.query_label(p);  // session-space reference
        if (lab != expect) ++wrong;
      }
      avg[i] += static_cast<double>(wrong) / 2000.0 / seeds;
    }
  }
  for (size_t i = 1; i < sizes.size(); ++i) CHECK(avg[i] <= avg[i - 1] + 0.02);
  CHECK(avg.back() <= avg.front() + 1e-12);
}
