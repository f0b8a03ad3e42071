#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::string edge_to_string(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

// Union-find over vertices [0, n).
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  if (k < 2) throw Error(Errc::InvalidArgument, "uniformity must be >= 2, got " + std::to_string(k));
  if (n < 1) throw Error(Errc::InvalidArgument, "vertex count must be >= 1, got " + std::to_string(n));

  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (static_cast<int>(e.size()) != k) {
      throw Error(Errc::NonUniformEdge, "edge " + std::to_string(i) + " " + edge_to_string(e) +
                                            " has " + std::to_string(e.size()) +
                                            " distinct vertices, expected " + std::to_string(k));
    }
    if (e.front() < 0 || e.back() >= n) {
      throw Error(Errc::VertexOutOfRange,
                  "edge " + std::to_string(i) + " " + edge_to_string(e) + " not within [0, " +
                      std::to_string(n) + ")");
    }
    if (!seen.insert(e).second) {
      throw Error(Errc::DuplicateEdge, "edge " + std::to_string(i) + " " + edge_to_string(e));
    }
  }

  incidence_.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) incidence_[v].push_back(static_cast<int>(i));
  }
}

int Hypergraph::min_degree() const noexcept {
  int d = num_edges();
  for (const auto& inc : incidence_) d = std::min(d, static_cast<int>(inc.size()));
  return d;
}

int Hypergraph::max_degree() const noexcept {
  int d = 0;
  for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
  return d;
}

std::vector<Edge> Coalescence::branch_edges_in_composed() const {
  std::vector<Edge> out;
  out.reserve(branch.edges().size());
  for (const Edge& e : branch.edges()) {
    Edge m;
    m.reserve(e.size());
    for (Vertex v : e) m.push_back(branch_map[v]);
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Vertex> Coalescence::branch_vertices_in_composed() const {
  std::vector<Vertex> out{cut};
  for (Vertex v = 0; v < branch.num_vertices(); ++v) {
    if (v != branch_root) out.push_back(branch_map[v]);
  }
  return out;
}

bool is_connected(const Hypergraph& g) {
  DisjointSets ds(g.num_vertices());
  int components = g.num_vertices();
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (ds.unite(e[0], e[i])) --components;
    }
  }
  return components == 1;
}

bool is_hypertree(const Hypergraph& g) {
  return is_connected(g) &&
         static_cast<long>(g.num_edges()) * (g.uniformity() - 1) == g.num_vertices() - 1L;
}

bool is_power_hypertree(const Hypergraph& g) {
  if (!is_hypertree(g)) return false;
  for (const Edge& e : g.edges()) {
    int pendent = 0;
    for (Vertex v : e) pendent += g.degree(v) == 1 ? 1 : 0;
    if (pendent < g.uniformity() - 2) return false;
  }
  return true;
}

bool is_hyperpath_rooted_at_pendent(const Hypergraph& g, Vertex root) {
  if (g.num_edges() < 1 || !g.contains(root) || !is_power_hypertree(g)) return false;
  if (g.max_degree() > 2 || g.degree(root) != 1) return false;
  const Edge& first = g.edge(g.incident(root)[0]);
  int inner = 0;
  for (Vertex v : first) inner += g.degree(v) == 2 ? 1 : 0;
  return inner <= 1;
}

Hypergraph power_hypertree(std::span<const std::pair<int, int>> tree_edges, int k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "power hypertree needs k >= 2");
  int tree_n = 1;
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0) throw Error(Errc::InputNotATree, "negative vertex id");
    tree_n = std::max({tree_n, a + 1, b + 1});
  }
  if (static_cast<int>(tree_edges.size()) != tree_n - 1) {
    throw Error(Errc::InputNotATree, std::to_string(tree_edges.size()) + " edges on " +
                                         std::to_string(tree_n) + " vertices");
  }
  DisjointSets ds(tree_n);
  for (auto [a, b] : tree_edges) {
    if (a == b || !ds.unite(a, b)) {
      throw Error(Errc::InputNotATree,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") closes a cycle");
    }
  }

  const int pad = k - 2;
  std::vector<Edge> edges;
  edges.reserve(tree_edges.size());
  int next = tree_n;
  for (auto [a, b] : tree_edges) {
    Edge e{a, b};
    for (int i = 0; i < pad; ++i) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, next, std::move(edges));
}

Hypergraph hyperpath(int m, int k) {
  if (m < 0) throw Error(Errc::InvalidArgument, "hyperpath length must be >= 0");
  std::vector<std::pair<int, int>> tree;
  for (int i = 0; i < m; ++i) tree.emplace_back(i, i + 1);
  return power_hypertree(tree, k);
}

Hypergraph hyperstar(int m, int k) {
  if (m < 0) throw Error(Errc::InvalidArgument, "hyperstar size must be >= 0");
  std::vector<std::pair<int, int>> tree;
  for (int i = 1; i <= m; ++i) tree.emplace_back(0, i);
  return power_hypertree(tree, k);
}

Hypergraph complete_hypergraph(int n, int k) {
  if (k < 2 || n < k) throw Error(Errc::InvalidArgument, "complete hypergraph needs 2 <= k <= n");
  std::vector<Edge> edges;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Edge e;
    for (int v = 0; v < n; ++v)
      if (pick[v]) e.push_back(v);
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(edges.begin(), edges.end());
  return Hypergraph(k, n, std::move(edges));
}

Coalescence coalesce(const Hypergraph& g1, Vertex v1, const Hypergraph& g2, Vertex v2) {
  if (g1.uniformity() != g2.uniformity()) {
    throw Error(Errc::UniformityMismatch, std::to_string(g1.uniformity()) + " vs " +
                                              std::to_string(g2.uniformity()));
  }
  if (!g1.contains(v1)) throw Error(Errc::VertexOutOfRange, "base vertex " + std::to_string(v1));
  if (!g2.contains(v2)) throw Error(Errc::VertexOutOfRange, "branch vertex " + std::to_string(v2));

  std::vector<Vertex> base_map(static_cast<std::size_t>(g1.num_vertices()));
  std::iota(base_map.begin(), base_map.end(), 0);
  std::vector<Vertex> branch_map(static_cast<std::size_t>(g2.num_vertices()));
  int next = g1.num_vertices();
  for (Vertex v = 0; v < g2.num_vertices(); ++v) branch_map[v] = (v == v2) ? v1 : next++;

  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) {
    Edge m;
    for (Vertex v : e) m.push_back(branch_map[v]);
    edges.push_back(std::move(m));
  }
  return Coalescence{Hypergraph(g1.uniformity(), next, std::move(edges)),
                     g1,
                     g2,
                     v1,
                     v2,
                     std::move(base_map),
                     std::move(branch_map)};
}

Coalescence relocate_branch(const Coalescence& p, Vertex target) {
  if (!p.base.contains(target) || target == p.cut) {
    throw Error(Errc::VertexNotInBase, "cannot relocate branch from " + std::to_string(p.cut) +
                                           " to " + std::to_string(target));
  }
  return coalesce(p.base, target, p.branch, p.branch_root);
}

Hypergraph build_gst(const Hypergraph& g0, Vertex u, int s, int t) {
  if (!g0.contains(u)) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  if (s < 0 || t < 0) throw Error(Errc::InvalidArgument, "path lengths must be >= 0");
  Hypergraph g = g0;
  if (s > 0) g = coalesce(g, u, hyperpath(s, g0.uniformity()), 0).composed;
  if (t > 0) g = coalesce(g, u, hyperpath(t, g0.uniformity()), 0).composed;
  return g;
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw Error(Errc::DimensionMismatch, "permutation size");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    Edge m;
    for (Vertex v : e) m.push_back(perm[v]);
    edges.push_back(std::move(m));
  }
  return Hypergraph(g.uniformity(), g.num_vertices(), std::move(edges));
}

}  // namespace hyperspec
