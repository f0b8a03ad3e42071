#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hyperspec/check.hpp"
#include "hyperspec/lab.hpp"
#include "hyperspec/solver.hpp"

namespace hyperspec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hyperspec/1";
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Check& c);
Json to_json(const std::vector<Check>& checks);
Json to_json(const SolverConfig& cfg);
// {lambda, x, residual, converged, restarts_used, checks, config_echo}
Json to_json(const EigenResult& r, const SolverConfig& cfg);
Json to_json(const LabReport& r);

struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  SolverConfig config;
  std::uint64_t seed = 42;
  // Left empty unless requested, so reports stay byte-identical across runs.
  std::string started_at;
  std::string finished_at;
};

Json to_json(const RunManifest& m);

// {schema, manifest, results}
Json make_report(const RunManifest& m, const std::vector<LabReport>& results);

}  // namespace hyperspec
