#ifndef SSKM_HARNESS_HPP
#define SSKM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sskm/fast_cluster.hpp"
#include "sskm/generators.hpp"
#include "sskm/ring_refine.hpp"

namespace sskm {

struct GeneratorSpec {
  std::string family = "gaussian";  // gaussian | hypercube | fms-subsets
  int k = 2;
  int n = 100;
  int r = 2;
  double separation = 10.0;
  int power = 2;
};

struct ExperimentConfig {
  std::string algo = "baseline";  // ring | fast | baseline
  std::string instance_file;      // exactly one of instance_file / generator
  std::optional<GeneratorSpec> generator;
  double epsilon = 0.2;
  double delta = 0.2;
  uint64_t seed_begin = 0;
  uint64_t seed_end = 19;  // inclusive
  double alpha = 20.0;
  RingConfig ring;
  FastConfig fast;
  SolverConfig solver;
  int reference_restarts = 50;
  int threads = 0;  // 0 = hardware concurrency
};

struct ResultRow {
  std::string algo;
  uint64_t seed = 0;
  int n = 0;
  int k = 0;
  int dim_or_qsize = 0;
  int power = 2;
  double epsilon = 0.0;
  double delta = 0.0;
  long long sc_queries = 0;
  long long label_queries = 0;
  double cost = 0.0;
  double cost_ratio = 0.0;
  double accuracy = -1.0;  // negative = unknown (no truth)
  long long runtime_ms = 0;
  std::string status = "ok";
};

/// One row per (seed, algo) cell, trials in parallel with independent
/// sessions, seeds seed_begin..seed_end. Per-row failures land in the status
/// column instead of aborting the grid. Rows come back sorted by (algo, seed).
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// Deterministic CSV: header metadata lines, fixed column order, shortest
/// round-trip number formatting. runtime_ms is wall-clock and is the one
/// column exempt from byte determinism.
std::string results_to_csv(std::span<const ResultRow> rows, bool include_meta = true);

/// min(planted-truth cost, best of `restarts` baseline runs); the denominator
/// used for cost_ratio.
double reference_cost(const ClusterInstance& inst, const GroundTruth* truth, int restarts,
                      uint64_t seed);

struct InabaSet {
  std::vector<std::vector<double>> points;
  static InabaSet line(int n);      // 0, 1, ..., n-1 on a line
  static InabaSet repeated(int n);  // the origin n times
};

/// Empirical failure rate of the mean-concentration bound: per trial, draw
/// m = ceil(1/(eps delta)) uniform samples (m_override > 0 overrides) and
/// check d^2(mean(S), mean(C)) <= eps cost(C)/|C| and
/// cost(C, mean(S)) <= (1+eps) cost(C). Returns violations / trials.
double estimate_inaba(double eps, double delta, int trials, const InabaSet& set, uint64_t seed,
                      long long m_override = 0);

/// Applies {"alpha":..,"c_med":..,"sample_cap":..,"dsq_batch":..,
/// "boost_rounds":..,"C":..,"max_samples":..,...} onto an experiment config.
void apply_config_json(ExperimentConfig& cfg, const std::string& json_text);

struct TriangleCheck {
  long long samples = 0;
  double worst_rel = 0.0;  // most negative slack seen, relative
  bool pass = false;
};

/// (a+b)^2 <= (1+e) a^2 + (1 + 1/e) b^2 over random a, b >= 0, e in (0,1),
/// at 1e-12 relative slack.
TriangleCheck check_squared_triangle(long long samples, uint64_t seed);

struct OracleCheck {
  int instances = 0;
  long long label_calls = 0;
  bool counter_exact = false;    // matches an independently maintained shadow
  bool labels_exact = false;     // zero clustering error vs the truth
  bool per_call_bound = false;   // <= k-1 queries once all representatives exist
  bool pass = false;
};

/// Random-instance label-oracle simulation check (shadow-counter accounting,
/// induced-labeling correctness, per-call bounds).
OracleCheck check_oracle_sim(int instances, uint64_t seed);

}  // namespace sskm

#endif  // SSKM_HARNESS_HPP
