// hyperspec: least H-eigenvalue of the signless Laplacian tensor and
// structure experiments on even-uniform hypergraphs.
#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/hgf.hpp"
#include "hyperspec/lab.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/report.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/solver.hpp"

using namespace hyperspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitAssertion = 3;

struct Common {
  std::uint64_t seed = 42;
  int restarts = 32;
  int max_restarts = 512;
  double tol = 1e-10;
  int threads = 0;
  std::string out;
  std::string csv;
  bool timestamps = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--restarts", c.restarts, "solver restarts")->capture_default_str();
  cmd->add_option("--max-restarts", c.max_restarts, "cap on restarts when results disagree")->capture_default_str();
  cmd->add_option("--tol", c.tol, "gradient tolerance")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads, 0 = all cores");
  cmd->add_option("--out", c.out, "write output here instead of stdout");
  cmd->add_flag("--timestamps", c.timestamps, "record start/finish times in the manifest");
}

SolverConfig solver_config(const Common& c) {
  SolverConfig cfg;
  cfg.rng_seed = c.seed;
  cfg.restarts = c.restarts;
  cfg.max_restarts = c.max_restarts;
  cfg.grad_tol = c.tol;
  cfg.threads = c.threads;
  cfg.validate();
  return cfg;
}

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_lambda_min(const std::string& input, const Common& c) {
  const Hypergraph g = read_hgf_file(input);
  const SolverConfig cfg = solver_config(c);
  const auto r = solve_least_eigen(g, cfg);
  emit(c.out, dump(to_json(r, cfg)));
  if (!r.converged) {
    std::cerr << "no convergence: residual " << r.residual << "\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

int cmd_odd_bipartite(const std::string& input, bool brute, const Common& c) {
  const Hypergraph g = read_hgf_file(input);
  const auto b = find_odd_bipartition(g);
  Json j;
  j["odd_bipartite"] = b.has_value();
  if (b) j["bipartition"] = b->to_string();
  int code = kExitOk;
  if (brute) {
    try {
      const bool exhaustive = brute_force_odd_bipartite(g);
      j["brute_force"] = exhaustive;
      if (exhaustive != b.has_value()) {
        std::cerr << "FAIL brute force disagrees with GF(2) solve\n";
        code = kExitAssertion;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::TooLarge) throw;
      std::cerr << "warning: " << e.what() << "; GF(2) result only\n";
    }
  }
  emit(c.out, dump(j));
  return code;
}

// ---------------------------------------------------------------------------

struct ExperimentArgs {
  std::string base;
  std::string branch;
  int branch_root = 0;
  int branch_path = -1;
  int branch_star = -1;
  int vertex = 0;
  int to = -1;
  int total = 2;
  int m = 2;
  int mmax = 6;
  std::string family = "path";
};

Coalescence branch_instance(const Hypergraph& g0, const ExperimentArgs& a) {
  const int k = g0.uniformity();
  std::optional<Hypergraph> h;
  int root = 0;
  if (!a.branch.empty()) {
    h = read_hgf_file(a.branch);
    root = a.branch_root;
  } else if (a.branch_path >= 0) {
    h = hyperpath(a.branch_path, k);
  } else if (a.branch_star >= 0) {
    h = hyperstar(a.branch_star, k);
  } else {
    throw Error(Errc::InvalidArgument, "give --branch FILE, --branch-path M or --branch-star M");
  }
  return coalesce(g0, a.vertex, *h, root);
}

void write_csv(const std::string& path, const std::string& param, const Json& table, const std::string& bound_key,
               bool bound_is_lower) {
  std::ostringstream s;
  s.precision(17);
  s << "param,lambda,bound,margin\n";
  for (const auto& row : table) {
    const double lam = row["lambda"].get<double>();
    const double bound = row[bound_key].get<double>();
    s << row[param].dump() << ',' << lam << ',' << bound << ',' << (bound_is_lower ? lam - bound : bound - lam)
      << '\n';
  }
  emit(path, s.str());
}

int cmd_experiment(const std::string& name, const ExperimentArgs& a, const Common& c, const std::string& argv_line) {
  RunManifest manifest;
  manifest.command = argv_line;
  manifest.seed = c.seed;
  if (c.timestamps) manifest.started_at = now_utc();

  LabOptions opts;
  opts.solver = solver_config(c);
  manifest.config = opts.solver;

  if (a.base.empty()) throw Error(Errc::InvalidArgument, "--base is required");
  const Hypergraph g0 = read_hgf_file(a.base);
  manifest.inputs.push_back(a.base);
  if (!a.branch.empty()) manifest.inputs.push_back(a.branch);

  LabReport rep;
  if (name == "relocate") {
    if (a.to < 0) throw Error(Errc::InvalidArgument, "--to is required");
    rep = relocation_experiment(branch_instance(g0, a), a.to, opts);
  } else if (name == "gst-scan") {
    rep = gst_scan(g0, a.vertex, a.total, opts);
    if (!c.csv.empty()) {
      Json table = rep.data["table"];
      const double end = table.front()["lambda"].get<double>();
      for (auto& row : table) row["chain_end"] = end;
      write_csv(c.csv, "t", table, "chain_end", true);
    }
  } else if (name == "minimize-class") {
    rep = find_minimizer(g0, a.m, opts).report;
  } else if (name == "bounds") {
    rep = bounds_report(branch_instance(g0, a), opts);
  } else if (name == "limit-scan") {
    BranchFamily fam;
    if (a.family == "path") {
      fam = BranchFamily::Path;
    } else if (a.family == "star") {
      fam = BranchFamily::Star;
    } else {
      throw Error(Errc::InvalidArgument, "unknown family '" + a.family + "'");
    }
    rep = limit_scan(g0, a.vertex, a.mmax, fam, opts);
    if (!c.csv.empty()) write_csv(c.csv, "m", rep.data["table"], "bound", false);
  } else if (name == "verify-eigvec") {
    rep = verify_eigenvector_suite(branch_instance(g0, a), opts);
  } else {
    throw Error(Errc::InvalidArgument, "unknown experiment '" + name + "'");
  }

  if (c.timestamps) manifest.finished_at = now_utc();
  emit(c.out, dump(make_report(manifest, {rep})));

  std::ostream& log = c.out.empty() ? std::cerr : std::cout;
  bool converged = true;
  for (const Check& chk : rep.checks) {
    log << (chk.status == CheckStatus::Fail ? "FAIL " : chk.status == CheckStatus::Skipped ? "SKIP " : "PASS ")
        << chk.name;
    if (chk.status == CheckStatus::Skipped) {
      log << " (" << chk.note << ")";
    } else {
      log << "  lhs=" << chk.lhs << " rhs=" << chk.rhs;
    }
    log << '\n';
    if (chk.status == CheckStatus::Fail && chk.name.find("converged") != std::string::npos) converged = false;
  }
  if (!converged) return kExitNoConvergence;
  return rep.passed() ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> parse_tree(const std::string& spec) {
  std::vector<std::pair<int, int>> out;
  std::stringstream s(spec);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(Errc::InvalidArgument, "tree edge '" + item + "' is not a-b");
    try {
      out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "tree edge '" + item + "' is not a-b");
    }
  }
  return out;
}

struct GenerateArgs {
  int m = 1;
  int k = 4;
  int s = 1;
  int t = 1;
  int vertex = 0;
  std::string tree;
  std::string base;
};

int cmd_generate(const std::string& family, const GenerateArgs& a, const Common& c) {
  Hypergraph g = [&] {
    if (family == "hyperpath") return hyperpath(a.m, a.k);
    if (family == "hyperstar") return hyperstar(a.m, a.k);
    if (family == "power-tree") {
      const auto tree = parse_tree(a.tree);
      return power_hypertree(tree, a.k);
    }
    if (family == "k5_4") return complete_hypergraph(5, 4);
    if (family == "gst") {
      const Hypergraph g0 = a.base.empty() ? complete_hypergraph(5, 4) : read_hgf_file(a.base);
      return build_gst(g0, a.vertex, a.s, a.t);
    }
    throw Error(Errc::InvalidArgument, "unknown family '" + family + "'");
  }();
  emit(c.out, to_hgf(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least H-eigenvalue of the signless Laplacian tensor of even-uniform hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string argv_line = "hyperspec";
  for (int i = 1; i < argc; ++i) argv_line += std::string(" ") + argv[i];

  Common common;
  std::string input;

  auto* lm = app.add_subcommand("lambda-min", "least H-eigenvalue of an HGF hypergraph");
  lm->add_option("input", input, "HGF file")->required();
  add_common(lm, common);

  bool brute = false;
  auto* ob = app.add_subcommand("odd-bipartite", "odd-bipartition by GF(2) elimination");
  ob->add_option("input", input, "HGF file")->required();
  ob->add_flag("--brute", brute, "cross-check with exhaustive search (nu <= 24)");
  add_common(ob, common);

  std::string experiment;
  ExperimentArgs ea;
  auto* ex = app.add_subcommand("experiment", "run a structure experiment and write a JSON report");
  ex->add_option("name", experiment, "relocate | gst-scan | minimize-class | bounds | limit-scan | verify-eigvec")
      ->required();
  ex->add_option("--base", ea.base, "base hypergraph G0 (HGF)");
  ex->add_option("--vertex", ea.vertex, "attachment vertex u of G0")->capture_default_str();
  ex->add_option("--branch", ea.branch, "branch hypergraph H (HGF)");
  ex->add_option("--branch-root", ea.branch_root, "root of H")->capture_default_str();
  ex->add_option("--branch-path", ea.branch_path, "use P_M attached at a pendent vertex as the branch");
  ex->add_option("--branch-star", ea.branch_star, "use S_M attached at its center as the branch");
  ex->add_option("--to", ea.to, "relocation target vertex");
  ex->add_option("--total", ea.total, "s + t for gst-scan")->capture_default_str();
  ex->add_option("--m", ea.m, "edge budget for minimize-class")->capture_default_str();
  ex->add_option("--mmax", ea.mmax, "largest m for limit-scan")->capture_default_str();
  ex->add_option("--family", ea.family, "path | star for limit-scan")->capture_default_str();
  ex->add_option("--csv", common.csv, "also write scan table as CSV");
  add_common(ex, common);

  std::string family;
  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "write a standard hypergraph as HGF");
  gen->add_option("family", family, "hyperpath | hyperstar | power-tree | k5_4 | gst")->required();
  gen->add_option("--m", ga.m, "number of edges")->capture_default_str();
  gen->add_option("--k", ga.k, "uniformity")->capture_default_str();
  gen->add_option("--tree", ga.tree, "tree edges for power-tree, e.g. 0-1,1-2,1-3");
  gen->add_option("--s", ga.s, "first path length for gst")->capture_default_str();
  gen->add_option("--t", ga.t, "second path length for gst")->capture_default_str();
  gen->add_option("--base", ga.base, "base for gst (default K5^(4))");
  gen->add_option("--vertex", ga.vertex, "attachment vertex for gst")->capture_default_str();
  gen->add_option("--out", common.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (lm->parsed()) return cmd_lambda_min(input, common);
    if (ob->parsed()) return cmd_odd_bipartite(input, brute, common);
    if (ex->parsed()) return cmd_experiment(experiment, ea, common, argv_line);
    if (gen->parsed()) return cmd_generate(family, ga, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
