#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperspec/check.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

enum class SeedStrategy { Random, ParityPatterns, Mixed };

const char* to_string(SeedStrategy s);
SeedStrategy seed_strategy_from_string(const std::string& s);

struct SolverConfig {
  int restarts = 32;
  // Further batches of `restarts` seeds run until `confirmations` converged
  // restarts reach the best λ, or max_restarts seeds have been tried.
  int max_restarts = 512;
  int confirmations = 3;
  int max_iters = 5000;
  double grad_tol = 1e-10;
  double step_init = 0.5;
  double armijo_c = 1e-4;
  double armijo_shrink = 0.5;
  std::uint64_t rng_seed = 42;
  SeedStrategy seed_strategy = SeedStrategy::Mixed;
  // Newton refinement on the eigen-equation once the residual is small.
  bool newton_polish = true;
  // 0 = hardware concurrency. Results do not depend on this value.
  int threads = 0;

  // Throws InvalidArgument on non-positive tolerances, restarts < 1 or
  // confirmations < 1.
  void validate() const;
};

struct EigenResult {
  double lambda = 0.0;
  std::vector<double> x;  // unit k-norm, first nonzero entry positive
  double residual = 0.0;
  int restarts_used = 0;
  int best_restart = -1;
  int iterations = 0;  // of the best restart
  bool converged = false;
  std::vector<Check> checks;
};

// Objective value after every accepted step of one restart; used to observe
// descent.
using DescentTrace = std::function<void(int restart, int iteration, double objective, bool newton)>;

// Least H-eigenvalue of Q(G) as min { Q(G)x^k : ‖x‖_k = 1 }, by projected
// gradient descent with Armijo backtracking from several seeds. The
// direction is g = Q x^{k-1} - λ(x)·x^{[k-1]} with λ(x) = Q x^k at unit norm;
// every iterate is rescaled onto the sphere. Restarts run in parallel and
// the smallest converged λ wins, ties broken by restart index. The problem
// is nonconvex and for dense k >= 6 instances the basin of the global
// minimum can be small, so the answer is the best local minimum found.
//
// Throws OddUniformity, NotConnected, InvalidArgument (no edges).
// Non-convergence is reported through EigenResult::converged.
EigenResult solve_least_eigen(const Hypergraph& g, const SolverConfig& cfg = {},
                              const DescentTrace& trace = {});

// Seed vectors of the parity-pattern strategy: ±1 patterns from an
// odd-bipartition (when one exists) and from odd-transversal sets.
std::vector<std::vector<double>> parity_seed_patterns(const Hypergraph& g);

struct UpperBound {
  std::string name;
  double value;
};

struct CertifyOptions {
  double residual_tol = 1e-8;
  double nonneg_slack = 1e-12;
  double bound_slack = 1e-9;
};

// Named checks: nonnegativity, λ < δ(G), residual, and each supplied bound.
std::vector<Check> certify(const Hypergraph& g, const EigenResult& r,
                           const std::vector<UpperBound>& bounds = {},
                           const CertifyOptions& opts = {});

}  // namespace hyperspec
