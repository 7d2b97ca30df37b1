#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sskm/harness.hpp"
#include "sskm/io.hpp"

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitAlgorithmError = 3;

std::pair<uint64_t, uint64_t> parse_seed_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    uint64_t s = std::stoull(text);
    return {s, s};
  }
  uint64_t a = std::stoull(text.substr(0, pos));
  uint64_t b = std::stoull(text.substr(pos + 2));
  if (b < a) throw std::invalid_argument("seed range must be ascending");
  return {a, b};
}

int cmd_gen(const std::string& family, int k, int n, int r, double separation, uint64_t seed,
            int power, const std::string& out_path) {
  if (family == "gaussian") {
    auto made = sskm::gen_gaussian(k, n, r, separation, seed, power);
    sskm::write_instance_file(out_path, made.instance, &made.truth.labels_for_eval());
  } else if (family == "hypercube") {
    auto made = sskm::gen_hypercube(r);
    sskm::write_instance_file(out_path, made.instance, &made.truth.labels_for_eval());
  } else if (family == "fms-subsets") {
    auto inst = sskm::gen_fms_from_subsets(r);
    auto truth = sskm::gen_hypercube(r).truth;
    sskm::write_instance_file(out_path, inst, &truth.labels_for_eval());
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_run(sskm::ExperimentConfig cfg, const std::string& config_path,
            const std::string& out_path) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    sskm::apply_config_json(cfg, ss.str());
  }
  auto rows = sskm::run_experiment(cfg);
  std::string csv = sskm::results_to_csv(rows);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write results file: " + out_path);
  out << csv;
  int failed = 0;
  for (const auto& row : rows)
    if (row.status != "ok") ++failed;
  std::cout << "wrote " << rows.size() << " rows to " << out_path;
  if (failed > 0) std::cout << " (" << failed << " with errors)";
  std::cout << "\n";
  return failed == 0 ? 0 : kExitAlgorithmError;
}

int cmd_verify(const std::string& check, int r, double eps, double delta, int trials, int n,
               uint64_t seed) {
  if (check == "lemma51") {
    bool all = true;
    for (int rr = 1; rr <= r; ++rr) {
      auto rep = sskm::verify_hypercube_optima(rr);
      std::cout << "r=" << rep.r << " min_cost=" << rep.min_cost
                << " expected=" << rep.expected_min_cost << " optima=" << rep.optima_count
                << " all_split=" << (rep.all_split_pairs ? "yes" : "no")
                << (rep.pass ? "  PASS" : "  FAIL") << "\n";
      all = all && rep.pass;
    }
    return all ? 0 : kExitAlgorithmError;
  }
  if (check == "inaba") {
    double rate = sskm::estimate_inaba(eps, delta, trials, sskm::InabaSet::line(n), seed);
    double bound = delta + 3.0 * std::sqrt(delta / trials);
    std::cout << "failure_rate=" << rate << " bound=" << bound
              << (rate <= bound ? "  PASS" : "  FAIL") << "\n";
    return rate <= bound ? 0 : kExitAlgorithmError;
  }
  if (check == "triangle") {
    auto rep = sskm::check_squared_triangle(trials, seed);
    std::cout << "samples=" << rep.samples << " worst_rel=" << rep.worst_rel
              << (rep.pass ? "  PASS" : "  FAIL") << "\n";
    return rep.pass ? 0 : kExitAlgorithmError;
  }
  if (check == "oracle") {
    auto rep = sskm::check_oracle_sim(trials, seed);
    std::cout << "instances=" << rep.instances << " label_calls=" << rep.label_calls
              << " counter_exact=" << rep.counter_exact << " labels_exact=" << rep.labels_exact
              << " per_call_bound=" << rep.per_call_bound << (rep.pass ? "  PASS" : "  FAIL")
              << "\n";
    return rep.pass ? 0 : kExitAlgorithmError;
  }
  throw std::invalid_argument("unknown check: " + check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-supervised k-means/k-median clustering with a same-cluster oracle"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string family, gen_out;
  int gk = 4, gn = 400, gr = 2, gpower = 2;
  double gsep = 20.0;
  uint64_t gseed = 0;
  gen->add_option("--family", family, "gaussian | hypercube | fms-subsets")->required();
  gen->add_option("--k", gk);
  gen->add_option("--n", gn);
  gen->add_option("--r", gr);
  gen->add_option("--separation", gsep);
  gen->add_option("--seed", gseed);
  gen->add_option("--power", gpower);
  gen->add_option("--out", gen_out, "output instance JSON")->required();

  // run
  auto* run = app.add_subcommand("run", "run an algorithm over a seed grid");
  std::string algo, instance_path, seeds_text = "0..19", config_path, run_out;
  double eps = 0.2, delta = 0.2;
  run->add_option("--algo", algo, "ring | fast | baseline")->required();
  run->add_option("--instance", instance_path)->required();
  run->add_option("--epsilon", eps);
  run->add_option("--delta", delta);
  run->add_option("--seeds", seeds_text, "S0..S1 inclusive");
  run->add_option("--config", config_path, "config JSON file");
  run->add_option("--out", run_out, "output CSV")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification");
  std::string check;
  int vr = 4, vtrials = 1000, vn = 1000;
  double veps = 0.2, vdelta = 0.2;
  uint64_t vseed = 1;
  verify->add_option("--check", check, "lemma51 | inaba | triangle | oracle")->required();
  verify->add_option("--r", vr);
  verify->add_option("--epsilon", veps);
  verify->add_option("--delta", vdelta);
  verify->add_option("--trials", vtrials);
  verify->add_option("--n", vn);
  verify->add_option("--seed", vseed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidConfig;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, gk, gn, gr, gsep, gseed, gpower, gen_out);
    if (run->parsed()) {
      sskm::ExperimentConfig cfg;
      cfg.algo = algo;
      cfg.instance_file = instance_path;
      cfg.epsilon = eps;
      cfg.delta = delta;
      auto [s0, s1] = parse_seed_range(seeds_text);
      cfg.seed_begin = s0;
      cfg.seed_end = s1;
      return cmd_run(std::move(cfg), config_path, run_out);
    }
    if (verify->parsed()) return cmd_verify(check, vr, veps, vdelta, vtrials, vn, vseed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAlgorithmError;
  }
  return 0;
}
