#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sskm/generators.hpp"
#include "sskm/oracle.hpp"
#include "sskm/rng.hpp"
#include "sskm/solvers.hpp"

using namespace sskm;

TEST_CASE("baseline: k = n is free, k = 1 equals the one-center solution") {
  auto made = gen_gaussian(3, 12, 2, 8.0, 42);
  const auto& inst = made.instance;

  CHECK(baseline_cluster(inst, inst.n(), 1).cost == doctest::Approx(0.0));

  auto k1 = baseline_cluster(inst, 1, 1);
  std::vector<int> all(inst.n());
  for (int p = 0; p < inst.n(); ++p) all[p] = p;
  CHECK(k1.cost == doctest::Approx(solve_one_center(inst, all).cost));

  CHECK_THROWS_AS(baseline_cluster(inst, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(baseline_cluster(inst, inst.n() + 1, 1), std::invalid_argument);
}

TEST_CASE("baseline is deterministic given the seed") {
  auto made = gen_gaussian(4, 200, 2, 10.0, 9);
  auto a = baseline_cluster(made.instance, 4, 77);
  auto b = baseline_cluster(made.instance, 4, 77);
  CHECK(a.labels == b.labels);
  CHECK(a.cost == b.cost);
}

TEST_CASE("baseline lands near the planted cost on well-separated blobs") {
  int good = 0;
  for (int seed = 0; seed < 20; ++seed) {
    auto made = gen_gaussian(4, 400, 2, 20.0, 100 + seed);
    const auto& inst = made.instance;
    std::vector<std::vector<int>> members(4);
    for (int p = 0; p < inst.n(); ++p)
      members[made.truth.label_for_eval(p) - 1].push_back(p);
    double planted = 0.0;
    for (const auto& m : members) planted += solve_one_center(inst, m).cost;
    auto got = baseline_cluster(inst, 4, seed);
    if (got.cost <= 1.05 * planted) ++good;
  }
  CHECK(good >= 18);
}

TEST_CASE("baseline works on finite metrics and the power-1 objective") {
  auto fms = gen_fms_from_subsets(2);
  auto got = baseline_cluster(fms, 2, 3);
  CHECK(got.cost == doctest::Approx(2.0).epsilon(1e-6));  // the optimal split cost

  auto med = gen_gaussian(3, 120, 2, 15.0, 5, 1);
  auto got1 = baseline_cluster(med.instance, 3, 5);
  CHECK(got1.cost > 0.0);
  CHECK(verify_cached_cost(med.instance, got1));
}

TEST_CASE("center completion: full partial set returns unchanged at zero cost") {
  auto made = gen_gaussian(2, 50, 2, 15.0, 11);
  OracleSession session(made.instance, made.truth);
  int lab0 = session.query_label(0);
  int lab1 = 0;
  for (int p = 1; p < 50; ++p) {
    lab1 = session.query_label(p);
    if (lab1 != lab0) break;
  }
  std::vector<LabeledCenter> partial{{Center::at({0.0, 0.0}), lab0},
                                     {Center::at({1.0, 1.0}), lab1}};
  long long before = session.same_cluster_count();
  auto got = complete_centers(made.instance, session, partial, 2, 0.2, 0.1);
  CHECK(session.same_cluster_count() == before);
  REQUIRE(got.size() == 2);
  CHECK(got[0].center.coords == partial[0].center.coords);
  CHECK(got[1].center.coords == partial[1].center.coords);
}

TEST_CASE("center completion rejects bad inputs") {
  auto made = gen_gaussian(2, 20, 2, 15.0, 12);
  OracleSession session(made.instance, made.truth);
  std::vector<LabeledCenter> ghost{{Center::at({0.0, 0.0}), 1}};
  // label 1 has not been established through the session yet
  CHECK_THROWS_AS(complete_centers(made.instance, session, ghost, 2, 0.2, 0.1),
                  std::invalid_argument);

  auto fms = gen_fms_from_subsets(2);
  GroundTruth truth = gen_hypercube(2).truth;
  OracleSession fsession(fms, truth);
  CHECK_THROWS_AS(complete_centers(fms, fsession, {}, 2, 0.2, 0.1), std::invalid_argument);
}

namespace {

struct Planted {
  GeneratedInstance data;
  std::vector<int> big, small;
};

// one dominant cluster near the origin plus a tiny far one
Planted planted_two(uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> pts;
  std::vector<int> labels;
  for (int i = 0; i < 950; ++i) {
    pts.push_back({rng.normal(), rng.normal()});
    labels.push_back(1);
  }
  for (int i = 0; i < 50; ++i) {
    pts.push_back({100.0 + rng.normal(), rng.normal()});
    labels.push_back(2);
  }
  Planted out{{ClusterInstance::euclidean(pts, 2, 2), GroundTruth(labels, 2)}, {}, {}};
  for (int p = 0; p < 1000; ++p) (labels[p] == 1 ? out.big : out.small).push_back(p);
  return out;
}

}  // namespace

TEST_CASE("center completion finds the small far cluster") {
  int in_ball = 0, cost_ok = 0;
  const int seeds = 30;
  for (int seed = 0; seed < seeds; ++seed) {
    Planted planted = planted_two(9000 + seed);
    const auto& inst = planted.data.instance;
    OracleSession session(inst, planted.data.truth);
    int big_label = session.query_label(planted.big.front());

    auto big_center = solve_one_center(inst, planted.big);
    auto small_center = solve_one_center(inst, planted.small);
    double opt = big_center.cost + small_center.cost;

    SolverConfig cfg;
    cfg.dsq_batch = 2000;
    long long before = session.same_cluster_count();
    auto got = complete_centers(inst, session, {{big_center.center, big_label}}, 2, 0.2, 0.1,
                                cfg, seed);
    long long used = session.same_cluster_count() - before;
    int rounds = default_boost_rounds(0.1);
    CHECK(used <= static_cast<long long>(rounds) * 1 * 2000 * 2);

    REQUIRE(got.size() == 2);
    // incoming center unchanged
    int big_idx = got[0].label == big_label ? 0 : 1;
    CHECK(got[big_idx].center.coords == big_center.center.coords);

    const auto& other = got[1 - big_idx].center;
    double radius = 0.0;
    for (int p : planted.small)
      radius = std::max(radius, inst.center_distance(p, small_center.center));
    double dist = 0.0;
    for (int d = 0; d < 2; ++d)
      dist += (other.coords[d] - small_center.center.coords[d]) *
              (other.coords[d] - small_center.center.coords[d]);
    if (std::sqrt(dist) <= radius) ++in_ball;

    double achieved =
        cluster_cost(inst, planted.big, got[big_idx].center) +
        cluster_cost(inst, planted.small, other);
    if (achieved <= 1.2 * opt) ++cost_ok;
  }
  CHECK(in_ball >= 26);
  CHECK(cost_ok >= 26);
}

TEST_CASE("a phase with no reachable uncovered label is reported, with progress") {
  // cluster 3 hides at the covered center while the covered clusters hold all
  // of the distance-squared mass, so a small batch cannot hit label 3
  std::vector<std::vector<double>> pts;
  std::vector<int> labels;
  for (int i = 0; i < 40; ++i) {
    double sign = i % 2 == 0 ? 1.0 : -1.0;
    pts.push_back({sign * 10.0, 0.0});
    labels.push_back(1);
    pts.push_back({100.0 + sign * 10.0, 0.0});
    labels.push_back(2);
  }
  pts.push_back({1e-7, 0.0});
  labels.push_back(3);
  pts.push_back({-1e-7, 0.0});
  labels.push_back(3);
  auto inst = ClusterInstance::euclidean(pts, 3, 2);
  GroundTruth truth(labels, 3);
  OracleSession session(inst, truth);
  int lab_a = session.query_label(0);
  int lab_b = session.query_label(1);
  SolverConfig cfg;
  cfg.dsq_batch = 60;
  cfg.boost_rounds = 2;
  std::vector<LabeledCenter> partial{{Center::at({0.0, 0.0}), lab_a},
                                     {Center::at({100.0, 0.0}), lab_b}};
  try {
    complete_centers(inst, session, partial, 3, 0.2, 0.1, cfg, 4);
    FAIL("expected PhaseExhaustedError");
  } catch (const PhaseExhaustedError& e) {
    CHECK(e.partial_progress.size() == 2);
  }
}
