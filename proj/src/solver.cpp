#include "hyperspec/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "hyperspec/error.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

namespace {

// Below this residual the iterate is close enough for Newton refinement.
constexpr double kNewtonThreshold = 1e-3;
constexpr double kPatternNoise = 0.05;
constexpr double kMinStep = 1e-30;
constexpr double kMaxStep = 1e4;
constexpr double kAgreeTol = 1e-8;

struct RestartOutcome {
  double lambda = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Gradient of λ(x) = Q x^k / ‖x‖_k^k at unit x, divided by k.
std::vector<double> descent_direction(const Hypergraph& g, const std::vector<double>& x, double f,
                                      double& max_abs, double& sum_sq) {
  const int k = g.uniformity();
  std::vector<double> d = q_apply(g, x);
  max_abs = 0.0;
  sum_sq = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    d[v] -= f * ipow(x[v], k - 1);
    max_abs = std::max(max_abs, std::abs(d[v]));
    sum_sq += d[v] * d[v];
  }
  return d;
}

double rayleigh(const Hypergraph& g, const std::vector<double>& y) {
  double s = 0.0;
  for (double v : y) s += ipow(v, g.uniformity());
  return q_form(g, y) / s;
}

// One Newton step on F(x, λ) = (Q x^{k-1} - λ x^{[k-1]}, (Σ x^k - 1)/k).
bool newton_step(const Hypergraph& g, const std::vector<double>& x, double f,
                 const std::vector<double>& grad, std::vector<double>& out) {
  const int n = g.num_vertices();
  const int k = g.uniformity();
  const auto jac = q_apply_jacobian(g, x);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::VectorXd rhs(n + 1);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) j(v, w) = jac[static_cast<std::size_t>(v) * n + w];
    j(v, v) -= (k - 1) * f * ipow(x[v], k - 2);
    const double xk1 = ipow(x[v], k - 1);
    j(v, n) = -xk1;
    j(n, v) = xk1;
    rhs(v) = -grad[v];
  }
  rhs(n) = 0.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd step = lu.solve(rhs);
  if (!step.allFinite()) return false;
  std::vector<double> y(x);
  for (int v = 0; v < n; ++v) y[v] += step(v);
  try {
    out = normalized(y, k);
  } catch (const Error&) {
    return false;
  }
  return true;
}

RestartOutcome run_restart(const Hypergraph& g, std::vector<double> seed, const SolverConfig& cfg,
                           int restart, const DescentTrace& trace) {
  const int k = g.uniformity();
  RestartOutcome out;
  std::vector<double> x = normalized(seed, k);
  double f = q_form(g, x);
  double step = cfg.step_init;
  int newton_cooldown = 0;

  int it = 0;
  double res = 0.0;
  for (; it < cfg.max_iters; ++it) {
    double sum_sq = 0.0;
    const auto d = descent_direction(g, x, f, res, sum_sq);
    if (res < cfg.grad_tol) {
      out.converged = true;
      break;
    }

    if (cfg.newton_polish && res < kNewtonThreshold && newton_cooldown == 0) {
      std::vector<double> y;
      if (newton_step(g, x, f, d, y)) {
        const double fy = q_form(g, y);
        double res_y = 0.0, sq_y = 0.0;
        descent_direction(g, y, fy, res_y, sq_y);
        if (res_y < res && fy <= f + 1e-13 * std::max(1.0, std::abs(f))) {
          x = std::move(y);
          f = fy;
          if (trace) trace(restart, it, f, true);
          continue;
        }
      }
      newton_cooldown = 20;
    }
    if (newton_cooldown > 0) --newton_cooldown;

    // Armijo backtracking on the scale-invariant quotient.
    double t = std::min(step * 2.0, kMaxStep);
    if (it == 0) t = cfg.step_init;
    const double slope = k * sum_sq;
    std::vector<double> y(x.size());
    double fy = f;
    bool accepted = false;
    while (t > kMinStep) {
      for (std::size_t v = 0; v < x.size(); ++v) y[v] = x[v] - t * d[v];
      fy = rayleigh(g, y);
      if (fy <= f - cfg.armijo_c * t * slope) {
        accepted = true;
        break;
      }
      t *= cfg.armijo_shrink;
    }
    if (!accepted) break;  // stalled at round-off level
    step = t;
    x = normalized(y, k);
    f = q_form(g, x);
    if (trace) trace(restart, it, f, false);
  }

  out.lambda = q_form(g, x);
  out.residual = residual(g, out.lambda, x);
  out.converged = out.residual < cfg.grad_tol;
  out.iterations = it;
  out.x = std::move(x);
  return out;
}

std::vector<double> random_seed(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = normal(rng);
  return x;
}

// Greedy single flips from sign(x) until no flip enlarges the set of edges with
// negative product; those edges are oddly bipartitioned by the result.
std::vector<double> sign_search(const Hypergraph& g, const std::vector<double>& x) {
  const int n = g.num_vertices();
  std::vector<double> s(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) s[v] = x[v] < 0 ? -1.0 : 1.0;
  std::vector<int> sign(static_cast<std::size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) sign[e] = product_over(g.edge(e), s) < 0 ? -1 : 1;
  for (bool improved = true; improved;) {
    improved = false;
    for (Vertex v = 0; v < n; ++v) {
      int gain = 0;  // positive edges turned negative, minus the reverse
      for (int e : g.incident(v)) gain += sign[e];
      if (gain <= 0) continue;
      s[v] = -s[v];
      for (int e : g.incident(v)) sign[e] = -sign[e];
      improved = true;
    }
  }
  return s;
}

// Pattern-derived seeds share basins, so only these count towards agreement.
bool independent_seed(int restart, const SolverConfig& cfg) {
  switch (cfg.seed_strategy) {
    case SeedStrategy::Random: return true;
    case SeedStrategy::ParityPatterns: return true;
    case SeedStrategy::Mixed: return restart % 2 == 0;
  }
  return true;
}

std::vector<double> seed_for_restart(const Hypergraph& g, int restart, const SolverConfig& cfg,
                                     const std::vector<std::vector<double>>& patterns) {
  const int n = g.num_vertices();
  std::mt19937_64 rng(derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(restart)));
  int pattern_index = -1;
  switch (cfg.seed_strategy) {
    case SeedStrategy::Random:
      break;
    case SeedStrategy::ParityPatterns:
      pattern_index = restart;
      break;
    case SeedStrategy::Mixed:
      if (restart % 2 == 1) pattern_index = restart / 2;
      break;
  }
  std::vector<double> x = random_seed(rng, n);
  if (pattern_index < 0 || patterns.empty()) return x;

  if (static_cast<std::size_t>(pattern_index) < patterns.size()) return patterns[pattern_index];
  std::vector<double> seeded = sign_search(g, x);
  for (std::size_t v = 0; v < seeded.size(); ++v) seeded[v] += kPatternNoise * x[v];
  return seeded;
}

void normalize_sign(std::vector<double>& x) {
  for (double v : x) {
    if (std::abs(v) > 1e-12) {
      if (v < 0) {
        for (double& w : x) w = -w;
      }
      return;
    }
  }
}

}  // namespace

const char* to_string(SeedStrategy s) {
  switch (s) {
    case SeedStrategy::Random: return "random";
    case SeedStrategy::ParityPatterns: return "parity-patterns";
    case SeedStrategy::Mixed: return "mixed";
  }
  return "mixed";
}

SeedStrategy seed_strategy_from_string(const std::string& s) {
  if (s == "random") return SeedStrategy::Random;
  if (s == "parity-patterns") return SeedStrategy::ParityPatterns;
  if (s == "mixed") return SeedStrategy::Mixed;
  throw Error(Errc::InvalidArgument, "unknown seed strategy '" + s + "'");
}

void SolverConfig::validate() const {
  if (restarts < 1) throw Error(Errc::InvalidArgument, "restarts must be >= 1");
  if (confirmations < 1) throw Error(Errc::InvalidArgument, "confirmations must be >= 1");
  if (max_iters < 1) throw Error(Errc::InvalidArgument, "max_iters must be >= 1");
  if (!(grad_tol > 0) || !(step_init > 0) || !(armijo_c > 0) || !(armijo_shrink > 0) ||
      !(armijo_shrink < 1)) {
    throw Error(Errc::InvalidArgument, "tolerances and step controls must be positive");
  }
}

std::vector<std::vector<double>> parity_seed_patterns(const Hypergraph& g) {
  const int n = g.num_vertices();
  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> patterns;
  auto add = [&](const Bipartition& b) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) x[v] = b.contains(v) ? -1.0 : 1.0;
    std::vector<double> neg(x);
    for (double& v : neg) v = -v;
    if (seen.count(x) || seen.count(neg)) return;
    seen.insert(x);
    patterns.push_back(std::move(x));
  };

  if (auto b = find_odd_bipartition(g)) add(*b);
  const int rotations = std::min(n, 4);
  for (int r = 0; r < rotations; ++r) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[v] = (v + r) % n;
    add(odd_transversal_subhypergraph(g, order).partition);
  }
  return patterns;
}

EigenResult solve_least_eigen(const Hypergraph& g, const SolverConfig& cfg, const DescentTrace& trace) {
  cfg.validate();
  if (g.uniformity() % 2 != 0) {
    throw Error(Errc::OddUniformity, "least H-eigenvalue needs even k, got " + std::to_string(g.uniformity()));
  }
  if (g.num_edges() == 0) throw Error(Errc::InvalidArgument, "hypergraph has no edges");
  if (!is_connected(g)) throw Error(Errc::NotConnected, "hypergraph is not connected");

  std::vector<std::vector<double>> patterns;
  if (cfg.seed_strategy != SeedStrategy::Random) patterns = parity_seed_patterns(g);

  const int cap = std::max(cfg.restarts, cfg.max_restarts);
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.restarts);
  std::vector<RestartOutcome> outcomes;
  int best = -1;
  while (true) {
    const int begin = static_cast<int>(outcomes.size());
    const int end = std::min(cap, begin + cfg.restarts);
    outcomes.resize(static_cast<std::size_t>(end));
    std::atomic<int> next{begin};
    auto worker = [&] {
      for (int r = next++; r < end; r = next++) {
        outcomes[r] = run_restart(g, seed_for_restart(g, r, cfg, patterns), cfg, r, trace);
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    // Prefer converged restarts; among them the smallest λ, lowest index on ties.
    for (int r = begin; r < end; ++r) {
      const auto& o = outcomes[r];
      if (best < 0) {
        best = r;
        continue;
      }
      const auto& b = outcomes[best];
      if (o.converged != b.converged) {
        if (o.converged) best = r;
      } else if (o.lambda < b.lambda) {
        best = r;
      }
    }

    // A minimum reached from a single seed is often a narrow local one; keep
    // sampling until enough restarts agree on it.
    const double lam = outcomes[best].lambda;
    const double tol = kAgreeTol * std::max(1.0, std::abs(lam));
    int agree = 0;
    for (int r = 0; r < end; ++r) {
      const auto& o = outcomes[r];
      agree += independent_seed(r, cfg) && o.converged && std::abs(o.lambda - lam) <= tol;
    }
    if (agree >= cfg.confirmations || end >= cap) break;
  }

  const auto& win = outcomes[best];
  EigenResult result;
  result.lambda = win.lambda;
  result.x = win.x;
  normalize_sign(result.x);
  result.residual = win.residual;
  result.converged = win.converged;
  result.restarts_used = static_cast<int>(outcomes.size());
  result.best_restart = best;
  result.iterations = win.iterations;
  result.checks = certify(g, result);
  return result;
}

std::vector<Check> certify(const Hypergraph& g, const EigenResult& r, const std::vector<UpperBound>& bounds,
                           const CertifyOptions& opts) {
  std::vector<Check> out;
  out.push_back(check_ge("nonnegative", r.lambda, 0.0, opts.nonneg_slack));
  const int delta = g.min_degree();
  if (delta > 0) {
    out.push_back(check_lt("below_min_degree", r.lambda, delta, 0.0));
  } else {
    out.push_back(skipped("below_min_degree", "minimum degree is zero"));
  }
  if (r.x.size() == static_cast<std::size_t>(g.num_vertices())) {
    out.push_back(check_le("residual", residual(g, r.lambda, r.x), 0.0, opts.residual_tol));
  } else {
    Check c{"residual", CheckStatus::Fail, 0.0, 0.0, opts.residual_tol, "eigenvector dimension mismatch"};
    out.push_back(c);
  }
  for (const auto& b : bounds) out.push_back(check_le("bound:" + b.name, r.lambda, b.value, opts.bound_slack));
  return out;
}

}  // namespace hyperspec
