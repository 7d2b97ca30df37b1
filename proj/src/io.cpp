#include "sskm/io.hpp"

#include <fstream>
#include <stdexcept>

namespace sskm {

using nlohmann::json;

LoadedInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("instance JSON needs a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  const int power = j.value("power", 2);
  const int k = j.at("k").get<int>();

  LoadedInstance out{ClusterInstance::euclidean({{0.0}}, 1, 2), std::nullopt};
  if (type == "euclidean") {
    auto points = j.at("points").get<std::vector<std::vector<double>>>();
    out.instance = ClusterInstance::euclidean(points, k, power);
  } else if (type == "finite_metric") {
    const int n_points = j.at("n_points").get<int>();
    const int candidates = j.at("candidates").get<int>();
    auto dist = j.at("dist").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(dist.size()) != n_points + candidates)
      throw std::invalid_argument("dist must be (n_points + candidates) square");
    out.instance = ClusterInstance::finite_metric(n_points, dist, k, power);
  } else {
    throw std::invalid_argument("unknown instance type: " + type);
  }

  if (j.contains("truth")) {
    auto labels = j.at("truth").get<std::vector<int>>();
    if (static_cast<int>(labels.size()) != out.instance.n())
      throw std::invalid_argument("truth must label every point");
    out.truth.emplace(std::move(labels), k);
  }
  return out;
}

LoadedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

json instance_to_json(const ClusterInstance& inst, const std::vector<int>* truth_labels) {
  json j;
  j["power"] = inst.power();
  j["k"] = inst.k();
  if (inst.is_euclidean()) {
    j["type"] = "euclidean";
    std::vector<std::vector<double>> points;
    points.reserve(inst.n());
    for (int p = 0; p < inst.n(); ++p) {
      auto x = inst.point(p);
      points.emplace_back(x.begin(), x.end());
    }
    j["points"] = points;
  } else {
    j["type"] = "finite_metric";
    j["n_points"] = inst.n();
    j["candidates"] = inst.candidate_count();
    const int rows = inst.matrix_rows();
    std::vector<std::vector<double>> dist(rows, std::vector<double>(rows));
    for (int a = 0; a < rows; ++a)
      for (int b = 0; b < rows; ++b) dist[a][b] = inst.matrix_entry(a, b);
    j["dist"] = dist;
  }
  if (truth_labels) {
    if (static_cast<int>(truth_labels->size()) != inst.n())
      throw std::invalid_argument("truth must label every point");
    j["truth"] = *truth_labels;
  }
  return j;
}

void write_instance_file(const std::string& path, const ClusterInstance& inst,
                         const std::vector<int>* truth_labels) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write instance file: " + path);
  out << instance_to_json(inst, truth_labels).dump() << '\n';
}

json report_to_json(const QueryReport& report) {
  json j;
  j["same_cluster"] = report.same_cluster;
  j["label_queries"] = report.label_queries;
  json rings = json::array();
  for (const auto& r : report.rings) rings.push_back({{"i", r.cluster}, {"j", r.ring}, {"m", r.samples}});
  j["rings"] = std::move(rings);
  j["cost"] = report.cost;
  if (report.accuracy) j["accuracy"] = *report.accuracy;
  if (report.k_prime) j["k_prime"] = *report.k_prime;
  if (report.opt_star) j["opt_star"] = *report.opt_star;
  if (report.threshold) j["threshold"] = *report.threshold;
  if (report.uniform_budget) {
    j["budget"] = {{"q1", *report.uniform_budget},
                   {"q3", report.learner_budget.value_or(0)},
                   {"dsq_batch", report.dsq_batch.value_or(0)},
                   {"boost_rounds", report.boost_rounds.value_or(0)}};
  }
  return j;
}

json classifier_to_json(const Classifier& clf) {
  json j;
  j["k"] = clf.k();
  j["seen"] = clf.seen_labels();
  json seps = json::array();
  for (int a = 1; a <= clf.k(); ++a) {
    for (int b = 1; b <= clf.k(); ++b) {
      if (a == b) continue;
      const BinarySeparator& s = clf.separator(a, b);
      json e{{"a", a}, {"b", b}};
      switch (s.kind) {
        case BinarySeparator::Kind::kConstant:
          e["kind"] = "constant";
          e["sign"] = s.constant;
          break;
        case BinarySeparator::Kind::kHalfspace:
          e["kind"] = "halfspace";
          e["w"] = s.w;
          e["offset"] = s.b;
          break;
        case BinarySeparator::Kind::kCandidatePair:
          e["kind"] = "candidate_pair";
          e["q1"] = s.q1;
          e["q2"] = s.q2;
          break;
      }
      seps.push_back(std::move(e));
    }
  }
  j["separators"] = std::move(seps);
  return j;
}

}  // namespace sskm
