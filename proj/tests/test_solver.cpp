#include <gtest/gtest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/oracles.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/solver.hpp"
#include "hyperspec/tensor.hpp"

using namespace hyperspec;

namespace {

// Least eigenvalues cross-checked with an independent BFGS multi-start in
// double precision; the two agree to ~1e-15.
constexpr double kK54 = 1.4939872392183373;
constexpr double kK54Path1 = 0.3464248186326914;
constexpr double kK54Path2 = 0.13218163195021004;
constexpr double kK54Path3 = 0.0676572036104589;
constexpr double kK54Star2 = 0.25007436636535274;

// Instance index in the seed-99 stream below -> least eigenvalue.
const std::map<int, double> kRugged{{8, 1.006713849887},  {17, 1.215102341673}, {18, 1.008700055717},
                                    {32, 1.114762624000}, {34, 1.845153896140}};

}  // namespace

TEST(Solver, SingleEdgeIsZero) {
  const auto r = solve_least_eigen(hyperpath(1, 4));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.lambda, 0.0, 1e-12);
  EXPECT_TRUE(all_passed(r.checks));
}

TEST(Solver, K54) {
  const auto r = solve_least_eigen(complete_hypergraph(5, 4));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.lambda, kK54, 1e-9);
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_TRUE(all_passed(r.checks));
  EXPECT_NEAR(k_norm(r.x, 4), 1.0, 1e-12);
}

TEST(Solver, K54WithBranches) {
  const auto k5 = complete_hypergraph(5, 4);
  struct Case {
    Hypergraph branch;
    double expect;
  };
  const Case cases[] = {{hyperpath(1, 4), kK54Path1},
                        {hyperpath(2, 4), kK54Path2},
                        {hyperpath(3, 4), kK54Path3},
                        {hyperstar(2, 4), kK54Star2}};
  for (const auto& c : cases) {
    const auto g = coalesce(k5, 0, c.branch, 0).composed;
    const auto r = solve_least_eigen(g);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.lambda, c.expect, 1e-9);
    EXPECT_LT(r.residual, 1e-10);
  }
}

TEST(Solver, TriangleK3) {
  const auto r = solve_least_eigen(Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_NEAR(r.lambda, 1.0, 1e-9);
}

TEST(Solver, GraphsMatchMatrixOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = gen::random_connected(rng, 2, 3 + trial % 6, trial % 4);
    const auto r = solve_least_eigen(g);
    EXPECT_NEAR(r.lambda, matrix_oracle_k2(g), 1e-8) << trial;
  }
}

TEST(Solver, ZeroIffOddBipartite) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = trial % 2 ? gen::random_odd_bipartite(rng, 4, 11, 5) : gen::random_connected(rng, 4, 11, 6 + trial % 6);
    const auto r = solve_least_eigen(g);
    EXPECT_EQ(r.lambda < 1e-8, is_odd_bipartite(g)) << trial << " lambda=" << r.lambda;
  }
}

TEST(Solver, DeterministicAcrossThreadCounts) {
  const auto g = coalesce(complete_hypergraph(5, 4), 1, hyperstar(2, 4), 0).composed;
  SolverConfig a;
  a.threads = 1;
  SolverConfig b;
  b.threads = 4;
  const auto ra = solve_least_eigen(g, a);
  const auto rb = solve_least_eigen(g, b);
  EXPECT_EQ(ra.lambda, rb.lambda);
  EXPECT_EQ(ra.x, rb.x);
  EXPECT_EQ(ra.best_restart, rb.best_restart);
}

TEST(Solver, SeedChangesPathNotAnswer) {
  const auto g = coalesce(complete_hypergraph(5, 4), 0, hyperpath(2, 4), 0).composed;
  SolverConfig a;
  a.rng_seed = 1;
  SolverConfig b;
  b.rng_seed = 2;
  EXPECT_NEAR(solve_least_eigen(g, a).lambda, solve_least_eigen(g, b).lambda, 1e-10);
}

TEST(Solver, AllSeedStrategiesAgree) {
  const auto g = complete_hypergraph(5, 4);
  for (auto s : {SeedStrategy::Random, SeedStrategy::ParityPatterns, SeedStrategy::Mixed}) {
    SolverConfig cfg;
    cfg.seed_strategy = s;
    EXPECT_NEAR(solve_least_eigen(g, cfg).lambda, kK54, 1e-9) << to_string(s);
    EXPECT_EQ(seed_strategy_from_string(to_string(s)), s);
  }
  EXPECT_THROW(seed_strategy_from_string("sideways"), Error);
}

TEST(Solver, DescentIsMonotone) {
  const auto g = coalesce(complete_hypergraph(5, 4), 0, hyperpath(3, 4), 0).composed;
  SolverConfig cfg;
  cfg.restarts = 4;
  cfg.threads = 1;
  std::map<int, std::vector<double>> seen;
  const auto r = solve_least_eigen(g, cfg, [&](int restart, int, double f, bool) { seen[restart].push_back(f); });
  EXPECT_EQ(static_cast<int>(seen.size()), r.restarts_used);
  for (const auto& [restart, trace] : seen) {
    ASSERT_FALSE(trace.empty());
    for (std::size_t i = 1; i < trace.size(); ++i) {
      EXPECT_LE(trace[i], trace[i - 1] + 1e-12 * std::max(1.0, std::abs(trace[i - 1])));
    }
  }
}

TEST(Solver, WithoutNewtonStillConverges) {
  SolverConfig cfg;
  cfg.newton_polish = false;
  cfg.max_iters = 200000;
  const auto r = solve_least_eigen(complete_hypergraph(5, 4), cfg);
  EXPECT_NEAR(r.lambda, kK54, 1e-9);
}

TEST(Solver, InputErrors) {
  EXPECT_THROW(solve_least_eigen(Hypergraph(3, 3, {{0, 1, 2}})), Error);
  EXPECT_THROW(solve_least_eigen(Hypergraph(4, 8, {{0, 1, 2, 3}, {4, 5, 6, 7}})), Error);
  EXPECT_THROW(solve_least_eigen(Hypergraph(4, 4, {})), Error);
  SolverConfig bad;
  bad.restarts = 0;
  EXPECT_THROW(solve_least_eigen(hyperpath(1, 4), bad), Error);
  bad = {};
  bad.confirmations = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = {};
  bad.grad_tol = -1;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Solver, CertifyFlagsViolations) {
  const auto g = complete_hypergraph(5, 4);
  auto r = solve_least_eigen(g);
  const auto ok = certify(g, r, {{"loose", 2.0}});
  EXPECT_TRUE(all_passed(ok));
  EXPECT_EQ(ok.size(), 4u);
  const auto tight = certify(g, r, {{"tight", 1.0}});
  EXPECT_FALSE(all_passed(tight));
  r.lambda = 4.0;  // not below δ = 4
  EXPECT_FALSE(all_passed(certify(g, r)));
}

TEST(Solver, ExtraBatchesUntilAgreement) {
  std::mt19937_64 rng(73);
  const auto g = gen::random_connected(rng, 6, 10, 10);
  SolverConfig fixed;
  fixed.max_restarts = 0;
  const auto once = solve_least_eigen(g, fixed);
  EXPECT_EQ(once.restarts_used, fixed.restarts);
  const auto r = solve_least_eigen(g);
  EXPECT_GE(r.restarts_used, 32);
  EXPECT_LE(r.restarts_used, 512);
  EXPECT_EQ(r.restarts_used % 32, 0);
  EXPECT_LE(r.lambda, once.lambda);
}

// Dense k = 6 instances have many local minima; reference values are the best
// of 2048 seeds here and agree with an independent BFGS multistart.
TEST(Solver, RuggedInstancesReachReference) {
  std::mt19937_64 rng(99);
  int found = 0;
  for (int t = 0; t < 40; ++t) {
    const int k = t % 2 ? 4 : 6;
    const int n = 8 + t % 5;
    const auto g = gen::random_connected(rng, k, n, n - 2 + t % 5);
    const auto it = kRugged.find(t);
    if (it == kRugged.end()) continue;
    ++found;
    EXPECT_NEAR(solve_least_eigen(g).lambda, it->second, 1e-7) << t;
  }
  EXPECT_EQ(found, static_cast<int>(kRugged.size()));
}

TEST(Solver, ParitySeedsIncludeBipartitionPattern) {
  const auto p = hyperpath(2, 4);
  const auto seeds = parity_seed_patterns(p);
  ASSERT_FALSE(seeds.empty());
  EXPECT_NEAR(q_form(p, seeds.front()), 0.0, 1e-12);
  for (const auto& s : seeds) EXPECT_EQ(static_cast<int>(s.size()), p.num_vertices());
}

TEST(Rng, DerivedSeedsAreStable) {
  EXPECT_EQ(derive_seed(42, "retry"), derive_seed(42, "retry"));
  EXPECT_NE(derive_seed(42, "retry"), derive_seed(43, "retry"));
  EXPECT_NE(derive_seed(42, std::uint64_t{0}), derive_seed(42, std::uint64_t{1}));
  static_assert(splitmix64(0) != 0);
}
