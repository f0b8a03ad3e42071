#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hyperspec {

using Vertex = int;
using Edge = std::vector<Vertex>;

// A k-uniform hypergraph on the dense vertex set [0, n).
//
// Edges are stored sorted and duplicate-free, in insertion order. Incidence
// lists and degrees are computed once at construction; a Hypergraph is
// immutable afterwards and may be shared read-only between threads.
class Hypergraph {
 public:
  // Validates and normalizes. Throws Error with NonUniformEdge,
  // VertexOutOfRange, DuplicateEdge or InvalidArgument.
  Hypergraph(int k, int n, std::vector<Edge> edges);

  int uniformity() const noexcept { return k_; }
  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  // Ids of the edges containing v, ascending.
  std::span<const int> incident(Vertex v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const {
    return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size());
  }
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

bool is_connected(const Hypergraph& g);

// Connected and ε(G)(k-1) = ν(G) - 1.
bool is_hypertree(const Hypergraph& g);

// Hypertree in which every edge has at least k-2 vertices of degree 1, i.e.
// the k-th power of an ordinary tree.
bool is_power_hypertree(const Hypergraph& g);

// Hyperpath P_m^k (m >= 1) and `root` is a pendent vertex of an end edge.
bool is_hyperpath_rooted_at_pendent(const Hypergraph& g, Vertex root);

// k-th power of a tree given by its edge list over vertices [0, N). Tree
// vertex i keeps id i; edge j receives the k-2 new vertices
// N + j(k-2), ..., N + j(k-2) + k-3. Throws InputNotATree.
Hypergraph power_hypertree(std::span<const std::pair<int, int>> tree_edges, int k);

// P_m^k on the path 0-1-...-m; vertex 0 is a pendent vertex.
Hypergraph hyperpath(int m, int k);
// S_m^k with center 0.
Hypergraph hyperstar(int m, int k);
// All k-subsets of [0, n); complete_hypergraph(5, 4) is K5^(4).
Hypergraph complete_hypergraph(int n, int k);

// G = base(cut) ⋄ branch(branch_root). The composed hypergraph keeps the base
// numbering; branch vertices other than the root are appended in increasing
// order. The first base.num_edges() edges of `composed` are the base edges.
struct Coalescence {
  Hypergraph composed;
  Hypergraph base;
  Hypergraph branch;
  Vertex cut;          // in composed (== base id of the cut vertex)
  Vertex branch_root;  // in branch numbering
  std::vector<Vertex> base_map;    // base vertex -> composed vertex
  std::vector<Vertex> branch_map;  // branch vertex -> composed vertex

  // Branch edges translated into composed numbering.
  std::vector<Edge> branch_edges_in_composed() const;
  // Composed vertex ids of the branch, root first.
  std::vector<Vertex> branch_vertices_in_composed() const;
};

// Throws UniformityMismatch, VertexOutOfRange.
Coalescence coalesce(const Hypergraph& g1, Vertex v1, const Hypergraph& g2, Vertex v2);

// Moves the branch from its current cut vertex to `target` in the base.
// Throws VertexNotInBase when target is the current cut or out of range.
Coalescence relocate_branch(const Coalescence& p, Vertex target);

// G_{s,t}: G0 with hyperpaths P_s^k and P_t^k both attached at u through a
// pendent vertex. s = 0 (or t = 0) means no path. Throws VertexOutOfRange.
Hypergraph build_gst(const Hypergraph& g0, Vertex u, int s, int t);

// Applies a vertex permutation (perm[old] = new).
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

}  // namespace hyperspec
