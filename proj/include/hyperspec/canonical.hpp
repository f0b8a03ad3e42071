#pragma once

#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Isomorphism-invariant certificate: two hypergraphs are isomorphic iff their
// certificates compare equal.
struct CanonicalForm {
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;  // relabeled, each sorted, list sorted

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Individualization-refinement over the vertex-edge incidence structure.
// Every leaf of the search tree is explored except those reachable by
// swapping twin vertices (equal incident edge sets), so the cost grows with
// the non-twin symmetry of the input. Intended for ν ≲ 20.
CanonicalForm canonical_form(const Hypergraph& g);

// Relabeling that produces the canonical form (perm[old] = new).
std::vector<Vertex> canonical_labeling(const Hypergraph& g);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperspec
