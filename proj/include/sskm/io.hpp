#ifndef SSKM_IO_HPP
#define SSKM_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sskm/clustering.hpp"
#include "sskm/instance.hpp"
#include "sskm/learners.hpp"
#include "sskm/report.hpp"

namespace sskm {

struct LoadedInstance {
  ClusterInstance instance;
  std::optional<GroundTruth> truth;
};

// Instance file schema (UTF-8 JSON):
//   {"type":"euclidean","power":2,"k":3,"points":[[x,...],...],"truth":[1,...]}
//   {"type":"finite_metric","power":2,"k":3,"n_points":N,"candidates":M,
//    "dist":[[...],...],"truth":[...]}
// "truth" is optional; dist covers points then candidates.
LoadedInstance instance_from_json(const nlohmann::json& j);
LoadedInstance read_instance_file(const std::string& path);

nlohmann::json instance_to_json(const ClusterInstance& inst,
                                const std::vector<int>* truth_labels = nullptr);
void write_instance_file(const std::string& path, const ClusterInstance& inst,
                         const std::vector<int>* truth_labels = nullptr);

nlohmann::json report_to_json(const QueryReport& report);

/// Seen labels plus per-pair separator parameters, for golden tests.
nlohmann::json classifier_to_json(const Classifier& clf);

}  // namespace sskm

#endif  // SSKM_IO_HPP
