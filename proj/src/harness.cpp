#include "sskm/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <atomic>
#include <limits>
#include <memory>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sskm/io.hpp"
#include "sskm/oracle.hpp"
#include "sskm/rng.hpp"
#include "sskm/solvers.hpp"

namespace sskm {

InabaSet InabaSet::line(int n) {
  if (n < 1) throw std::invalid_argument("set size must be >= 1");
  InabaSet s;
  s.points.reserve(n);
  for (int i = 0; i < n; ++i) s.points.push_back({static_cast<double>(i)});
  return s;
}

InabaSet InabaSet::repeated(int n) {
  if (n < 1) throw std::invalid_argument("set size must be >= 1");
  InabaSet s;
  s.points.assign(n, {0.0});
  return s;
}

double estimate_inaba(double eps, double delta, int trials, const InabaSet& set, uint64_t seed,
                      long long m_override) {
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("eps and delta must lie in (0, 1)");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (set.points.empty()) throw std::invalid_argument("empty point set");
  const int n = static_cast<int>(set.points.size());
  const int dim = static_cast<int>(set.points.front().size());
  const long long m =
      m_override > 0 ? m_override : static_cast<long long>(std::ceil(1.0 / (eps * delta)));

  std::vector<double> mu(dim, 0.0);
  for (const auto& p : set.points)
    for (int d = 0; d < dim; ++d) mu[d] += p[d];
  for (double& v : mu) v /= n;
  double full_cost = 0.0;
  for (const auto& p : set.points)
    for (int d = 0; d < dim; ++d) full_cost += (p[d] - mu[d]) * (p[d] - mu[d]);
  const double per_point = full_cost / n;

  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<uint64_t>(t)));
    std::vector<double> sample_mu(dim, 0.0);
    for (long long s = 0; s < m; ++s) {
      const auto& p = set.points[rng.uniform_int(0, n - 1)];
      for (int d = 0; d < dim; ++d) sample_mu[d] += p[d];
    }
    for (double& v : sample_mu) v /= static_cast<double>(m);
    double drift = 0.0;
    for (int d = 0; d < dim; ++d) drift += (sample_mu[d] - mu[d]) * (sample_mu[d] - mu[d]);
    double sample_cost = 0.0;
    for (const auto& p : set.points)
      for (int d = 0; d < dim; ++d) sample_cost += (p[d] - sample_mu[d]) * (p[d] - sample_mu[d]);
    const double slack = 1e-12 * std::max(1.0, full_cost);
    bool ok = drift <= eps * per_point + slack && sample_cost <= (1.0 + eps) * full_cost + slack;
    if (!ok) ++violations;
  }
  return static_cast<double>(violations) / trials;
}

double reference_cost(const ClusterInstance& inst, const GroundTruth* truth, int restarts,
                      uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("reference restarts must be >= 1");
  double best = std::numeric_limits<double>::infinity();
  if (truth) {
    std::vector<std::vector<int>> members(inst.k());
    for (int p = 0; p < inst.n(); ++p) members[truth->label_for_eval(p) - 1].push_back(p);
    double planted = 0.0;
    for (const auto& m : members)
      if (!m.empty()) planted += solve_one_center(inst, m).cost;
    best = planted;
  }
  SolverConfig cfg;
  cfg.alpha_restarts = restarts;
  best = std::min(best, baseline_cluster(inst, inst.k(), seed, cfg).cost);
  return best;
}

namespace {

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

struct TrialInput {
  std::shared_ptr<const ClusterInstance> instance;
  std::shared_ptr<const GroundTruth> truth;  // may be null
};

TrialInput materialize(const ExperimentConfig& cfg, uint64_t seed,
                       const std::shared_ptr<const ClusterInstance>& shared_inst,
                       const std::shared_ptr<const GroundTruth>& shared_truth) {
  if (!cfg.instance_file.empty()) return {shared_inst, shared_truth};
  const GeneratorSpec& g = *cfg.generator;
  if (g.family == "gaussian") {
    auto made = gen_gaussian(g.k, g.n, g.r, g.separation, seed, g.power);
    return {std::make_shared<ClusterInstance>(std::move(made.instance)),
            std::make_shared<GroundTruth>(std::move(made.truth))};
  }
  if (g.family == "hypercube") {
    auto made = gen_hypercube(g.r);
    return {std::make_shared<ClusterInstance>(std::move(made.instance)),
            std::make_shared<GroundTruth>(std::move(made.truth))};
  }
  if (g.family == "fms-subsets") {
    auto inst = gen_fms_from_subsets(g.r);
    auto truth = gen_hypercube(g.r).truth;
    return {std::make_shared<ClusterInstance>(std::move(inst)),
            std::make_shared<GroundTruth>(std::move(truth))};
  }
  throw std::invalid_argument("unknown generator family: " + g.family);
}

ResultRow run_trial(const ExperimentConfig& cfg, uint64_t seed,
                    const std::shared_ptr<const ClusterInstance>& shared_inst,
                    const std::shared_ptr<const GroundTruth>& shared_truth) {
  ResultRow row;
  row.algo = cfg.algo;
  row.seed = seed;
  row.epsilon = cfg.epsilon;
  row.delta = cfg.delta;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    TrialInput in = materialize(cfg, seed, shared_inst, shared_truth);
    const ClusterInstance& inst = *in.instance;
    row.n = inst.n();
    row.k = inst.k();
    row.power = inst.power();
    row.dim_or_qsize = inst.is_euclidean() ? inst.dim() : inst.candidate_count();

    Clustering result;
    if (cfg.algo == "baseline") {
      result = baseline_cluster(inst, inst.k(), seed, cfg.solver);
    } else if (cfg.algo == "ring") {
      if (!in.truth) throw std::invalid_argument("ring needs an instance with truth");
      OracleSession session(inst, *in.truth);
      RingConfig rc = cfg.ring;
      rc.solver = cfg.solver;
      rc.seed = seed;
      auto out = run_ring_refine(inst, session, cfg.epsilon, cfg.delta, cfg.alpha, rc);
      result = std::move(out.clustering);
      row.sc_queries = out.report.same_cluster;
      row.label_queries = out.report.label_queries;
    } else if (cfg.algo == "fast") {
      if (!in.truth) throw std::invalid_argument("fast needs an instance with truth");
      OracleSession session(inst, *in.truth);
      FastConfig fc = cfg.fast;
      fc.solver = cfg.solver;
      fc.seed = seed;
      auto out = run_fast_cluster(inst, session, cfg.epsilon, cfg.delta, fc);
      result = std::move(out.clustering);
      row.sc_queries = out.report.same_cluster;
      row.label_queries = out.report.label_queries;
    } else {
      throw std::invalid_argument("unknown algo: " + cfg.algo);
    }

    row.cost = result.cost;
    double ref = reference_cost(inst, in.truth.get(), cfg.reference_restarts, 0xBA5Eu);
    if (ref > 0.0) {
      row.cost_ratio = row.cost / ref;
    } else {
      row.cost_ratio = row.cost <= 1e-12 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    if (in.truth) {
      long long err = clustering_error(result.labels, in.truth->labels_for_eval(), inst.k());
      row.accuracy = 1.0 - static_cast<double>(err) / inst.n();
    }
  } catch (const std::exception& e) {
    row.status = sanitize(std::string("error: ") + e.what());
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return row;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.instance_file.empty() == !cfg.generator)
    throw std::invalid_argument("provide exactly one of instance_file / generator");
  if (cfg.seed_end < cfg.seed_begin) throw std::invalid_argument("empty seed range");

  std::shared_ptr<const ClusterInstance> shared_inst;
  std::shared_ptr<const GroundTruth> shared_truth;
  if (!cfg.instance_file.empty()) {
    LoadedInstance loaded = read_instance_file(cfg.instance_file);
    shared_inst = std::make_shared<ClusterInstance>(std::move(loaded.instance));
    if (loaded.truth) shared_truth = std::make_shared<GroundTruth>(std::move(*loaded.truth));
  }

  std::vector<uint64_t> seeds;
  for (uint64_t s = cfg.seed_begin; s <= cfg.seed_end; ++s) seeds.push_back(s);

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int threads = std::max(1, cfg.threads > 0 ? cfg.threads : (hw > 0 ? hw : 4));

  std::vector<ResultRow> rows(seeds.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= seeds.size()) return;
      rows[i] = run_trial(cfg, seeds[i], shared_inst, shared_truth);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(threads, static_cast<int>(seeds.size())); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return a.algo != b.algo ? a.algo < b.algo : a.seed < b.seed;
  });
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string results_to_csv(std::span<const ResultRow> rows, bool include_meta) {
  std::string out;
  if (include_meta) {
    out += "# sskm results\n";
    out += "# cost_ratio reference: min(planted-truth cost, best baseline over configured restarts)\n";
  }
  out +=
      "algo,seed,n,k,dim_or_qsize,power,epsilon,delta,sc_queries,label_queries,cost,cost_ratio,"
      "accuracy,runtime_ms,status\n";
  for (const ResultRow& r : rows) {
    out += r.algo;
    out += ',' + std::to_string(r.seed);
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.k);
    out += ',' + std::to_string(r.dim_or_qsize);
    out += ',' + std::to_string(r.power);
    out += ',' + fmt(r.epsilon);
    out += ',' + fmt(r.delta);
    out += ',' + std::to_string(r.sc_queries);
    out += ',' + std::to_string(r.label_queries);
    out += ',' + fmt(r.cost);
    out += ',' + fmt(r.cost_ratio);
    out += ',';
    if (r.accuracy >= 0.0) out += fmt(r.accuracy);
    out += ',' + std::to_string(r.runtime_ms);
    out += ',' + r.status;
    out += '\n';
  }
  return out;
}

void apply_config_json(ExperimentConfig& cfg, const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "alpha") {
      cfg.alpha = value.get<double>();
    } else if (key == "c_med") {
      cfg.ring.c_med = value.get<double>();
    } else if (key == "sample_cap") {
      cfg.fast.sample_cap = value.get<long long>();
    } else if (key == "dsq_batch") {
      cfg.solver.dsq_batch = value.get<long long>();
    } else if (key == "boost_rounds") {
      cfg.solver.boost_rounds = value.get<int>();
    } else if (key == "C") {
      cfg.ring.learner.scale_c = value.get<double>();
      cfg.fast.learner.scale_c = value.get<double>();
    } else if (key == "max_samples") {
      cfg.ring.learner.max_samples = value.get<long long>();
      cfg.fast.learner.max_samples = value.get<long long>();
    } else if (key == "cap_factor") {
      cfg.ring.cap_factor = value.get<double>();
    } else if (key == "alpha_restarts") {
      cfg.solver.alpha_restarts = value.get<int>();
    } else if (key == "lloyd_max_iters") {
      cfg.solver.lloyd_max_iters = value.get<int>();
    } else if (key == "reference_restarts") {
      cfg.reference_restarts = value.get<int>();
    } else if (key == "threads") {
      cfg.threads = value.get<int>();
    } else if (key == "antisymmetric_pairs") {
      cfg.ring.learner.antisymmetric_pairs = value.get<bool>();
      cfg.fast.learner.antisymmetric_pairs = value.get<bool>();
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

TriangleCheck check_squared_triangle(long long samples, uint64_t seed) {
  TriangleCheck out;
  out.samples = samples;
  Rng rng(seed);
  double worst = 0.0;
  bool ok = true;
  for (long long i = 0; i < samples; ++i) {
    // mix of scales so both tiny and large magnitudes get exercised
    double a = rng.uniform() * std::pow(10.0, rng.uniform_in(-6.0, 6.0));
    double b = rng.uniform() * std::pow(10.0, rng.uniform_in(-6.0, 6.0));
    double e = rng.uniform();
    if (e <= 0.0 || e >= 1.0) continue;
    double lhs = (a + b) * (a + b);
    double rhs = (1.0 + e) * a * a + (1.0 + 1.0 / e) * b * b;
    double rel = (lhs - rhs) / std::max(1e-300, rhs);
    worst = std::max(worst, rel);
    if (rel > 1e-12) ok = false;
  }
  out.worst_rel = worst;
  out.pass = ok;
  return out;
}

OracleCheck check_oracle_sim(int instances, uint64_t seed) {
  OracleCheck out;
  out.instances = instances;
  out.counter_exact = true;
  out.labels_exact = true;
  out.per_call_bound = true;
  for (int t = 0; t < instances; ++t) {
    Rng rng(mix_seed(seed, static_cast<uint64_t>(t)));
    const int k = rng.uniform_int(1, 8);
    const int n = rng.uniform_int(k, 200);
    std::vector<std::vector<double>> pts(n, std::vector<double>(2));
    for (auto& p : pts) {
      p[0] = rng.uniform();
      p[1] = rng.uniform();
    }
    std::vector<int> truth_labels(n);
    for (int i = 0; i < k; ++i) truth_labels[i] = i + 1;  // every label non-empty
    for (int i = k; i < n; ++i) truth_labels[i] = rng.uniform_int(1, k);
    ClusterInstance inst = ClusterInstance::euclidean(pts, k, 2);
    GroundTruth truth(truth_labels, k);
    OracleSession session(inst, truth);

    std::vector<int> shadow_reps;       // truth labels of appended representatives
    long long shadow_sc = 0;
    std::vector<int> session_labels(n, 0);
    auto expected_cost = [&](int truth_label) {
      const int size = static_cast<int>(shadow_reps.size());
      for (int i = 0; i < size; ++i) {
        if (size == k && i == size - 1) return static_cast<long long>(size - 1);
        if (shadow_reps[i] == truth_label) return static_cast<long long>(i + 1);
      }
      return static_cast<long long>(size);
    };
    auto shadow_label = [&](int truth_label) {
      const int size = static_cast<int>(shadow_reps.size());
      for (int i = 0; i < size; ++i)
        if (shadow_reps[i] == truth_label) return i + 1;
      shadow_reps.push_back(truth_label);
      return static_cast<int>(shadow_reps.size());
    };

    for (int pass = 0; pass < 2; ++pass) {
      for (int p = 0; p < n; ++p) {
        bool full = static_cast<int>(shadow_reps.size()) == k;
        long long cost = expected_cost(truth_labels[p]);
        if (full && cost > k - 1) out.per_call_bound = false;
        shadow_sc += cost;
        long long before = session.same_cluster_count();
        int lab = session.query_label(p);
        ++out.label_calls;
        if (session.same_cluster_count() - before != cost) out.counter_exact = false;
        int expect = shadow_label(truth_labels[p]);
        if (lab != expect) out.labels_exact = false;
        if (pass == 0) session_labels[p] = lab;
      }
    }
    if (session.same_cluster_count() != shadow_sc) out.counter_exact = false;
    if (clustering_error(session_labels, truth_labels, k) != 0) out.labels_exact = false;
  }
  out.pass = out.counter_exact && out.labels_exact && out.per_call_bound;
  return out;
}

}  // namespace sskm
