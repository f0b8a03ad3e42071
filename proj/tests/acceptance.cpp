// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "hyperspec/oracles.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/report.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/tensor.hpp"

using namespace hyperspec;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    if (!cond) ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. λ_min = 0 exactly on the odd-bipartite instances; GF(2) = brute force.
void zero_characterization(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(derive_seed(42, "criterion-1"));
  int positives = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = i % 2 ? 4 : 6;
    const int n = k == 4 ? 8 + i % 7 : 11 + i % 4;
    const auto g = i % 3 == 0 ? gen::random_odd_bipartite(rng, k, n, 3 + i % 4)
                              : gen::random_connected(rng, k, n, n - 2 + i % 6);
    const auto r = solve_least_eigen(g);
    const bool gf2 = is_odd_bipartite(g);
    positives += gf2 ? 1 : 0;
    o.expect((r.lambda < 1e-8) == gf2, "instance " + std::to_string(i) + ": lambda " +
                                            std::to_string(r.lambda) + " vs detector " + std::to_string(gf2));
    o.expect(brute_force_odd_bipartite(g) == gf2, "instance " + std::to_string(i) + ": brute force disagrees");
  }
  o.expect(positives > 10 && positives < 90, "degenerate instance mix");
  const double secs = seconds_since(t0);
  o.expect(secs < 120.0, "took " + std::to_string(secs) + " s");
  o.why << (o.ok ? "" : "; ") << positives << "/100 odd-bipartite, " << secs << " s";
}

// 2. k = 2 against the dense signless Laplacian.
void graph_oracle(Outcome& o) {
  std::mt19937_64 rng(derive_seed(42, "criterion-2"));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::random_connected(rng, 2, 2 + i % 7, i % 5);
    worst = std::max(worst, std::abs(solve_least_eigen(g).lambda - matrix_oracle_k2(g)));
  }
  o.expect(worst < 1e-8, "max deviation " + std::to_string(worst));
  const double k3 = solve_least_eigen(Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}})).lambda;
  o.expect(std::abs(k3 - 1.0) <= 1e-9, "K3 gives " + std::to_string(k3));
  o.why << (o.ok ? "" : "; ") << "max |solver - matrix| = " << worst;
}

// 3. Residual and 0 <= λ < δ on every converged result.
void residual_consistency(Outcome& o) {
  std::mt19937_64 rng(derive_seed(42, "criterion-3"));
  const auto k5 = complete_hypergraph(5, 4);
  std::vector<Hypergraph> cases{k5, complete_hypergraph(7, 6)};
  for (int m = 1; m <= 6; ++m) cases.push_back(coalesce(k5, 0, hyperpath(m, 4), 0).composed);
  for (int i = 0; i < 30; ++i) cases.push_back(gen::random_connected(rng, i % 2 ? 4 : 6, 9 + i % 6, i % 4));
  double worst = 0.0;
  int converged = 0;
  for (const auto& g : cases) {
    const auto r = solve_least_eigen(g);
    if (!r.converged) continue;
    ++converged;
    const double res = residual(g, r.lambda, r.x);
    worst = std::max(worst, res);
    o.expect(r.lambda >= -1e-12, "negative lambda");
    o.expect(r.lambda < g.min_degree(), "lambda not below min degree");
  }
  o.expect(converged == static_cast<int>(cases.size()), "some instances did not converge");
  o.expect(worst < 1e-8, "residual " + std::to_string(worst));
  o.why << (o.ok ? "" : "; ") << converged << " converged, max residual " << worst;
}

// 4. Finite-difference gradient and Euler identity.
void gradient_euler(Outcome& o) {
  std::mt19937_64 rng(derive_seed(42, "criterion-4"));
  double worst_grad = 0.0, worst_euler = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int k = i % 2 ? 4 : 6;
    const auto g = gen::random_connected(rng, k, 10 + i % 4, 3);
    auto x = gen::random_vector(rng, g.num_vertices());
    const auto y = q_apply(g, x);
    double dot = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) dot += x[v] * y[v];
    const double q = q_form(g, x);
    worst_euler = std::max(worst_euler, std::abs(dot - q) / std::max(std::abs(q), 1e-300));
    for (int v = 0; v < g.num_vertices(); ++v) {
      const double h = 1e-5 * std::max(1.0, std::abs(x[v]));
      const double keep = x[v];
      x[v] = keep + h;
      const double up = q_form(g, x);
      x[v] = keep - h;
      const double down = q_form(g, x);
      x[v] = keep;
      const double fd = (up - down) / (2 * h);
      const double exact = k * y[v];
      worst_grad = std::max(worst_grad, std::abs(fd - exact) / std::max(std::abs(exact), 1.0));
    }
  }
  o.expect(worst_grad < 1e-6, "gradient rel. error " + std::to_string(worst_grad));
  o.expect(worst_euler < 1e-12, "Euler rel. error " + std::to_string(worst_euler));
  o.why << (o.ok ? "" : "; ") << "grad " << worst_grad << ", Euler " << worst_euler;
}

// 5. First-eigenvector structure on K5^(4) with P1, P2, P3, S2 branches; S2
// hangs at its center, so only the paths get a profile.
void structure_suite(Outcome& o) {
  const auto t0 = Clock::now();
  const auto k5 = complete_hypergraph(5, 4);
  const std::pair<const char*, Hypergraph> branches[] = {
      {"P1", hyperpath(1, 4)}, {"P2", hyperpath(2, 4)}, {"S2", hyperstar(2, 4)}, {"P3", hyperpath(3, 4)}};
  int profiles = 0;
  for (const auto& [name, h] : branches) {
    const auto rep = verify_eigenvector_suite(coalesce(k5, 0, h, 0));
    for (const auto& c : rep.checks) {
      o.expect(c.passed(), std::string(name) + ": " + c.name + " failed");
      profiles += c.name == "profile:profile_matches_recurrence" && c.status == CheckStatus::Pass ? 1 : 0;
    }
    const auto* beta = &rep.data["beta"];
    o.expect(beta->get<double>() < -1e-9, std::string(name) + ": beta not negative");
  }
  o.expect(profiles == 3, "path profile not checked on every path branch");
  const double secs = seconds_since(t0);
  o.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  o.why << (o.ok ? "" : "; ") << secs << " s";
}

// 6. G_{s,t} ordering and the minimizer of T_m(K5^(4)).
void perturbation_suite(Outcome& o) {
  const auto t0 = Clock::now();
  const auto k5 = complete_hypergraph(5, 4);
  for (int total : {2, 3}) {
    const auto rep = gst_scan(k5, 0, total);
    for (const auto& c : rep.checks) o.expect(c.passed(), "gst total " + std::to_string(total) + ": " + c.name);
  }
  for (int m = 1; m <= 3; ++m) {
    const auto res = find_minimizer(k5, m);
    o.expect(res.report.passed(), "T_" + std::to_string(m) + " minimizer check failed");
    o.expect(is_single_path_attachment(res.best.graph, 5, 5), "T_" + std::to_string(m) + " best is not a path");
    o.why << "T_" << m << ": " << res.members.size() << " members; ";
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 600.0, "took " + std::to_string(secs) + " s");
  o.why << secs << " s";
}

// 7. Upper bounds along K5^(4)(u) ⋄ P_m and the odd-transversal guarantee.
void bounds_suite(Outcome& o) {
  const auto k5 = complete_hypergraph(5, 4);
  double prev = INFINITY, last = 0.0;
  for (int m = 1; m <= 6; ++m) {
    const auto g = coalesce(k5, 0, hyperpath(m, 4), 0).composed;
    const double lam = solve_least_eigen(g).lambda;
    const double bound = std::min(4.0 * 5 / g.num_vertices(), 4.0 / (3 * m + 1));
    o.expect(lam <= bound + 1e-9, "m=" + std::to_string(m) + " above bound");
    o.expect(lam <= prev, "m=" + std::to_string(m) + " increased");
    prev = last = lam;
  }
  o.expect(last < 0.2, "final value " + std::to_string(last));
  std::mt19937_64 rng(derive_seed(42, "criterion-7"));
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::random_connected(rng, i % 2 ? 4 : 6, 10 + i % 5, 2 + i % 6);
    const auto r = odd_transversal_subhypergraph(g);
    o.expect(r.count >= (g.num_edges() + 1) / 2, "odd transversal below half on instance " + std::to_string(i));
  }
  o.why << (o.ok ? "" : "; ") << "lambda(P6) = " << last;
}

// 8. Identical seeds give identical report bytes.
void reproducibility(Outcome& o) {
  const auto k5 = complete_hypergraph(5, 4);
  auto make = [&](int threads) {
    LabOptions opts;
    opts.solver.rng_seed = 1234;
    opts.solver.threads = threads;
    RunManifest m;
    m.command = "acceptance";
    m.seed = 1234;
    m.config = opts.solver;
    const auto p = coalesce(k5, 0, hyperpath(2, 4), 0);
    return make_report(m, {verify_eigenvector_suite(p, opts), bounds_report(p, opts), gst_scan(k5, 0, 3, opts),
                           limit_scan(k5, 0, 4, BranchFamily::Path, opts)})
        .dump(2);
  };
  const std::string a = make(0), b = make(0), c = make(1);
  o.expect(a == b, "two runs differ");
  o.expect(a == c, "thread count changes the report");
  o.why << (o.ok ? "" : "; ") << a.size() << " bytes";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"zero characterization", zero_characterization},
      {"k=2 matrix oracle", graph_oracle},
      {"residual and 0 <= lambda < min degree", residual_consistency},
      {"gradient and Euler identity", gradient_euler},
      {"first-eigenvector structure", structure_suite},
      {"perturbation and minimizer", perturbation_suite},
      {"upper bounds and limit", bounds_suite},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.why << "exception: " << e.what();
    }
    std::printf("criterion %d %s: %s (%s)\n", index++, name, o.ok ? "PASS" : "FAIL", o.why.str().c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
