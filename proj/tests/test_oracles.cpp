#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/oracles.hpp"
#include "hyperspec/solver.hpp"

using namespace hyperspec;

TEST(MatrixOracle, KnownSpectra) {
  // Signless Laplacian of K3 has spectrum {4, 1, 1}.
  EXPECT_NEAR(matrix_oracle_k2(Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}})), 1.0, 1e-12);
  // Bipartite graphs have a zero.
  EXPECT_NEAR(matrix_oracle_k2(Hypergraph(2, 3, {{0, 1}, {1, 2}})), 0.0, 1e-12);
  // K4: 2n-2 once and n-2 three times.
  EXPECT_NEAR(matrix_oracle_k2(complete_hypergraph(4, 2)), 2.0, 1e-12);
  EXPECT_THROW(matrix_oracle_k2(hyperpath(1, 4)), Error);
}

TEST(SamplingOracle, AgreesWithSolverOnSmallInstances) {
  const auto k5 = complete_hypergraph(5, 4);
  EXPECT_NEAR(sampling_oracle(k5), solve_least_eigen(k5).lambda, 1e-5);
  const auto p = coalesce(k5, 0, hyperpath(1, 4), 0).composed;
  EXPECT_NEAR(sampling_oracle(p), solve_least_eigen(p).lambda, 1e-5);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = gen::random_connected(rng, 4, 9, 2);
    EXPECT_NEAR(sampling_oracle(g, 100, trial), solve_least_eigen(g).lambda, 1e-5) << trial;
  }
}

TEST(SamplingOracle, Limits) {
  EXPECT_THROW(sampling_oracle(hyperpath(4, 4)), Error);  // 13 vertices
  EXPECT_THROW(sampling_oracle(Hypergraph(3, 3, {{0, 1, 2}})), Error);
}
