#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sskm/fast_cluster.hpp"
#include "sskm/generators.hpp"
#include "sskm/oracle.hpp"
#include "sskm/rng.hpp"

using namespace sskm;

TEST_CASE("uniform sample budget: golden value and scalings") {
  CHECK(uniform_sample_budget(1, 0.2, 0.1) == 64000);
  CHECK(uniform_sample_budget(2, 0.2, 0.1) == 8 * uniform_sample_budget(1, 0.2, 0.1));
  CHECK(uniform_sample_budget(1, 0.1, 0.1) == 4 * uniform_sample_budget(1, 0.2, 0.1));
  CHECK_THROWS_AS(uniform_sample_budget(1, 0.25, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(uniform_sample_budget(1, 0.2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(uniform_sample_budget(0, 0.2, 0.1), std::invalid_argument);
}

TEST_CASE("large-cluster detection: strict threshold and centroids") {
  auto inst = ClusterInstance::euclidean({{0.0}, {2.0}, {4.0}, {6.0}}, 2, 2);

  std::vector<std::pair<int, int>> mono{{0, 1}, {1, 1}, {2, 1}};
  auto got = detect_large_clusters(inst, mono, 2, 0.5, 3);
  REQUIRE(got.size() == 1);
  CHECK(got[0].label == 1);
  CHECK(got[0].centroid[0] == doctest::Approx(2.0));

  // threshold = (0.5 / 4) * 16 = 2: counts 3 and 1 straddle it
  std::vector<std::pair<int, int>> mixed{{0, 1}, {1, 1}, {2, 1}, {3, 2}};
  auto got2 = detect_large_clusters(inst, mixed, 2, 0.5, 16);
  REQUIRE(got2.size() == 1);
  CHECK(got2[0].label == 1);
  CHECK(got2[0].samples == 3);

  // counts at exactly the threshold are not large ("more than")
  std::vector<std::pair<int, int>> at{{0, 1}, {1, 1}, {2, 2}, {3, 2}};
  // threshold = (0.5 / 4) * 16 = 2; both labels sit exactly at 2
  CHECK_THROWS_AS(detect_large_clusters(inst, at, 2, 0.5, 16), Error);
}

TEST_CASE("equal blobs all clear the large threshold on nearly every seed") {
  int all_four = 0;
  for (int seed = 0; seed < 20; ++seed) {
    auto made = gen_gaussian(4, 2000, 2, 20.0, 3000 + seed);
    OracleSession session(made.instance, made.truth);
    Rng rng(seed);
    std::vector<std::pair<int, int>> sample;
    const long long budget = 2000;
    for (long long s = 0; s < budget; ++s) {
      int p = rng.uniform_int(0, 1999);
      sample.emplace_back(p, session.query_label(p));
    }
    auto got = detect_large_clusters(made.instance, sample, 4, 0.2, budget);
    if (got.size() == 4) ++all_four;
  }
  CHECK(all_four >= 19);
}

TEST_CASE("k = 1 fast run labels everything identically") {
  auto made = gen_gaussian(1, 400, 2, 5.0, 7);
  OracleSession session(made.instance, made.truth);
  FastConfig cfg;
  cfg.sample_cap = 200;
  auto out = run_fast_cluster(made.instance, session, 0.3, 0.3, cfg);
  for (int lab : out.clustering.labels) CHECK(lab == 1);
  std::vector<int> all(400);
  for (int p = 0; p < 400; ++p) all[p] = p;
  CHECK(out.clustering.cost == doctest::Approx(solve_one_center(made.instance, all).cost));
  CHECK(out.report.same_cluster == 0);  // single-cluster labels are free
}

TEST_CASE("recoloring respects the gate and the nearest-center fallback") {
  auto made = gen_gaussian(4, 1500, 3, 20.0, 99);
  OracleSession session(made.instance, made.truth);
  FastConfig cfg;
  cfg.sample_cap = 800;
  cfg.seed = 2;
  auto out = run_fast_cluster(made.instance, session, 0.3, 0.3, cfg);
  const auto& inst = made.instance;

  REQUIRE(out.centers.size() == 4);
  std::vector<Center> by_label(4);
  for (const auto& lc : out.centers) by_label[lc.label - 1] = lc.center;

  for (int p = 0; p < inst.n(); ++p) {
    int lab = out.clustering.labels[p];
    if (out.gate_passed[p]) {
      CHECK(lab == out.pac_labels[p]);
      CHECK(std::find(out.large_labels.begin(), out.large_labels.end(), lab) !=
            out.large_labels.end());
      CHECK(inst.center_distance_sq(p, by_label[lab - 1]) <= out.gate_threshold + 1e-12);
    } else {
      // fallback points sit on their nearest completed center
      double own = inst.center_distance_sq(p, by_label[lab - 1]);
      for (int i = 0; i < 4; ++i)
        CHECK(own <= inst.center_distance_sq(p, by_label[i]) + 1e-12);
    }
  }
  CHECK(out.gate_threshold ==
        doctest::Approx(4.0 * out.opt_star / (inst.n() * std::pow(0.3 / 6.0, 3))));
  CHECK(*out.report.k_prime == static_cast<int>(out.large_labels.size()));

  // detected large centroids pass through center completion untouched
  long long err = clustering_error(out.clustering.labels, made.truth.labels_for_eval(), 4);
  CHECK(static_cast<double>(err) / inst.n() <= 0.3);
}

TEST_CASE("budget terms do not depend on the instance size") {
  FastConfig cfg;
  cfg.sample_cap = 600;
  QueryReport reports[2];
  int idx = 0;
  for (int n : {1500, 3000}) {
    auto made = gen_gaussian(3, n, 2, 20.0, 1234);
    OracleSession session(made.instance, made.truth);
    reports[idx++] = run_fast_cluster(made.instance, session, 0.3, 0.3, cfg).report;
  }
  CHECK(*reports[0].uniform_budget == *reports[1].uniform_budget);
  CHECK(*reports[0].learner_budget == *reports[1].learner_budget);
  CHECK(*reports[0].dsq_batch == *reports[1].dsq_batch);
  CHECK(*reports[0].boost_rounds == *reports[1].boost_rounds);
}

TEST_CASE("fast clustering rejects unsupported instances") {
  auto fms = gen_fms_from_subsets(2);
  GroundTruth truth = gen_hypercube(2).truth;
  OracleSession session(fms, truth);
  CHECK_THROWS_AS(run_fast_cluster(fms, session, 0.3, 0.3), std::invalid_argument);

  auto med = gen_gaussian(2, 40, 2, 10.0, 1, 1);
  OracleSession msession(med.instance, med.truth);
  CHECK_THROWS_AS(run_fast_cluster(med.instance, msession, 0.3, 0.3), std::invalid_argument);
}
