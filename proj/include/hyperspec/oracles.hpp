#pragma once

#include <cstdint>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Independent cross-checks for solve_least_eigen. Neither shares code with
// the descent path beyond q_form.

// k = 2: least eigenvalue of the signless Laplacian matrix D + A from a
// dense symmetric eigensolver. Throws WrongUniformity.
double matrix_oracle_k2(const Hypergraph& g);

// Minimum of Q x^k / ‖x‖_k^k over every sign pattern (first entry fixed
// positive) combined with `budget` random magnitude profiles each, followed
// by a finite-difference descent from the best few samples. Returns an upper
// bound on λ_min that is tight on small instances.
// Throws TooLarge (ν > 12), OddUniformity.
double sampling_oracle(const Hypergraph& g, int budget = 200, std::uint64_t rng_seed = 42);

}  // namespace hyperspec
