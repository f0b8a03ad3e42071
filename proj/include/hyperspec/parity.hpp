#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Two-coloring of the vertices; in_first[v] == 1 iff v ∈ V1.
struct Bipartition {
  std::vector<std::uint8_t> in_first;

  int size() const noexcept { return static_cast<int>(in_first.size()); }
  bool contains(Vertex v) const { return in_first[static_cast<std::size_t>(v)] != 0; }
  Bipartition complement() const;

  // "0110..." with one character per vertex.
  std::string to_string() const;
  static Bipartition from_string(const std::string& bits);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Solves B·y = 1 over GF(2), B the edge-vertex incidence matrix, by
// elimination in column order with free variables set to 0. When
// `force_in_first` is given the extra equation y_u = 1 is appended.
// Returns nullopt iff the system is inconsistent. Throws OddUniformity.
std::optional<Bipartition> find_odd_bipartition(const Hypergraph& g,
                                                 std::optional<Vertex> force_in_first = {});

bool is_odd_bipartite(const Hypergraph& g);

// True iff every edge meets V1 in an odd number of vertices.
bool verify_odd_bipartition(const Hypergraph& g, const Bipartition& b);

// Exhaustive search over all 2^ν subsets. Throws TooLarge for ν > 24.
bool brute_force_odd_bipartite(const Hypergraph& g);

struct OddTransversalResult {
  Bipartition partition;      // T = V1
  std::vector<int> kept_edges;  // ids of edges meeting T oddly
  int count = 0;
};

// Method of conditional expectations on X = Σ_e [|e ∩ T| odd]. Vertices are
// fixed in `order` (default 0..ν-1); an edge with an undecided vertex counts
// 1/2. Ties put the vertex outside T. Guarantees count >= ⌈ε/2⌉.
OddTransversalResult odd_transversal_subhypergraph(const Hypergraph& g,
                                                   const std::vector<Vertex>& order = {});

// Largest number of odd-transversal edges over all 2^ν choices of T.
// Throws TooLarge for ν > 24.
int max_odd_transversal_brute_force(const Hypergraph& g);

}  // namespace hyperspec
