#include "hyperspec/report.hpp"

namespace hyperspec {

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["tolerance"] = c.tolerance;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const SolverConfig& cfg) {
  Json j;
  j["restarts"] = cfg.restarts;
  j["max_restarts"] = cfg.max_restarts;
  j["confirmations"] = cfg.confirmations;
  j["max_iters"] = cfg.max_iters;
  j["grad_tol"] = cfg.grad_tol;
  j["step_init"] = cfg.step_init;
  j["armijo_c"] = cfg.armijo_c;
  j["armijo_shrink"] = cfg.armijo_shrink;
  j["rng_seed"] = cfg.rng_seed;
  j["seed_strategy"] = to_string(cfg.seed_strategy);
  j["newton_polish"] = cfg.newton_polish;
  return j;
}

Json to_json(const EigenResult& r, const SolverConfig& cfg) {
  Json j;
  j["lambda"] = r.lambda;
  j["x"] = r.x;
  j["residual"] = r.residual;
  j["converged"] = r.converged;
  j["restarts_used"] = r.restarts_used;
  j["best_restart"] = r.best_restart;
  j["iterations"] = r.iterations;
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = to_json(c);
  j["checks"] = std::move(checks);
  j["config_echo"] = to_json(cfg);
  return j;
}

Json to_json(const LabReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["instance_hgf"] = r.instance_hgf;
  j["checks"] = to_json(r.checks);
  j["data"] = r.data;
  return j;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["inputs"] = m.inputs;
  j["tool_version"] = kToolVersion;
  j["seed"] = m.seed;
  j["config"] = to_json(m.config);
  if (!m.started_at.empty()) j["started_at"] = m.started_at;
  if (!m.finished_at.empty()) j["finished_at"] = m.finished_at;
  return j;
}

Json make_report(const RunManifest& m, const std::vector<LabReport>& results) {
  Json j;
  j["schema"] = kReportSchema;
  j["manifest"] = to_json(m);
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  j["results"] = std::move(arr);
  return j;
}

}  // namespace hyperspec
