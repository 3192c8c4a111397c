#ifndef CHERN_REPORT_HPP
#define CHERN_REPORT_HPP

#include <string>
#include <vector>

#include "chern/lab.hpp"

namespace chern {

// Serialized run: schema v1, exact integers only, stable field order, and
// no timing data, so fixed (inputs, seed, config) give identical bytes.
std::string report_json(const std::vector<ExperimentReport>& reports, const LabConfig& cfg);

// header: entry,claim,e0,e1,e2,lambda,verdict,seed
std::string report_csv(const std::vector<ExperimentReport>& reports);

void write_file(const std::string& path, const std::string& content);

}  // namespace chern

#endif
