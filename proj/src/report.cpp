#include "chern/report.hpp"

#include <fstream>

namespace chern {

std::string report_json(const std::vector<ExperimentReport>& reports, const LabConfig& cfg) {
  nlohmann::ordered_json root;
  root["schema_version"] = "1";
  root["seed"] = cfg.seed;
  nlohmann::ordered_json config;
  config["char"] = cfg.characteristic;
  config["nmax"] = cfg.nmax;
  config["trials"] = cfg.trials;
  config["sop_trials"] = cfg.sop_trials;
  config["c_max"] = cfg.c_max;
  config["s_max"] = cfg.s_max;
  root["config"] = config;
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const ExperimentReport& r : reports) {
    nlohmann::ordered_json run;
    run["claim"] = r.claim;
    run["entry"] = r.entry;
    run["inputs"] = r.inputs;
    run["verdict"] = to_string(r.verdict);
    run["seed"] = r.seed;
    run["evidence"] = r.evidence;
    runs.push_back(std::move(run));
  }
  root["runs"] = runs;
  return root.dump(2) + "\n";
}

namespace {

std::string csv_field(const nlohmann::ordered_json& ev, const char* key, size_t index) {
  auto it = ev.find(key);
  if (it == ev.end() || !it->is_array() || it->size() <= index) return "";
  return (*it)[index].dump();
}

}  // namespace

std::string report_csv(const std::vector<ExperimentReport>& reports) {
  std::string out = "entry,claim,e0,e1,e2,lambda,verdict,seed\n";
  for (const ExperimentReport& r : reports) {
    const char* ekey = r.evidence.contains("e")       ? "e"
                       : r.evidence.contains("e_I")   ? "e_I"
                       : r.evidence.contains("e_M")   ? "e_M"
                       : r.evidence.contains("e_natural") ? "e_natural"
                                                          : "e";
    std::string lambda;
    if (r.evidence.contains("lambda")) lambda = r.evidence["lambda"].dump();
    out += r.entry + "," + r.claim + "," + csv_field(r.evidence, ekey, 0) + "," +
           csv_field(r.evidence, ekey, 1) + "," + csv_field(r.evidence, ekey, 2) + "," + lambda +
           "," + to_string(r.verdict) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw InputError("write failed for '" + path + "'");
}

}  // namespace chern
