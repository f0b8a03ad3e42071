#include "hyperspec/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hyperspec {

namespace {

using Coloring = std::vector<int>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Hypergraph& g) : g_(g) {
    std::map<std::vector<int>, int> classes;
    twin_.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto inc = g.incident(v);
      std::vector<int> key(inc.begin(), inc.end());
      twin_[v] = classes.emplace(std::move(key), static_cast<int>(classes.size())).first->second;
    }
  }

  void run() {
    Coloring initial(static_cast<std::size_t>(g_.num_vertices()), 0);
    search(std::move(initial));
  }

  const CanonicalForm& best() const { return *best_; }
  const std::vector<Vertex>& best_labeling() const { return best_perm_; }

 private:
  // Color refinement: a vertex's new color is its old color plus the sorted
  // multiset of (sorted colors of its co-members) over incident edges.
  // Ranks are assigned in signature order, so the result depends only on the
  // isomorphism class of (G, coloring).
  Coloring refine(Coloring colors) const {
    const int n = g_.num_vertices();
    int classes = count_classes(colors);
    while (true) {
      using Signature = std::pair<int, std::vector<std::vector<int>>>;
      std::vector<Signature> sig(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) {
        sig[v].first = colors[v];
        for (int id : g_.incident(v)) {
          std::vector<int> others;
          for (Vertex w : g_.edge(id))
            if (w != v) others.push_back(colors[w]);
          std::sort(others.begin(), others.end());
          sig[v].second.push_back(std::move(others));
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::vector<Signature> order = sig;
      std::sort(order.begin(), order.end());
      order.erase(std::unique(order.begin(), order.end()), order.end());
      for (Vertex v = 0; v < n; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(order.begin(), order.end(), sig[v]) - order.begin());
      }
      const int now = static_cast<int>(order.size());
      if (now == classes) return colors;
      classes = now;
    }
  }

  static int count_classes(const Coloring& colors) {
    Coloring c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(Coloring colors) {
    colors = refine(std::move(colors));
    const int n = g_.num_vertices();

    // First non-singleton cell, by color.
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      consider_leaf(colors);
      return;
    }

    std::vector<int> tried_twins;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (std::find(tried_twins.begin(), tried_twins.end(), twin_[v]) != tried_twins.end()) continue;
      tried_twins.push_back(twin_[v]);
      Coloring next(colors.size());
      for (Vertex w = 0; w < n; ++w) next[w] = 2 * colors[w] + 1;
      next[v] = 2 * colors[v];
      search(std::move(next));
    }
  }

  void consider_leaf(const Coloring& perm) {
    CanonicalForm f{g_.uniformity(), g_.num_vertices(), {}};
    f.edges.reserve(g_.edges().size());
    for (const Edge& e : g_.edges()) {
      Edge m;
      m.reserve(e.size());
      for (Vertex v : e) m.push_back(perm[v]);
      std::sort(m.begin(), m.end());
      f.edges.push_back(std::move(m));
    }
    std::sort(f.edges.begin(), f.edges.end());
    if (!best_ || f < *best_) {
      best_ = std::move(f);
      best_perm_ = perm;
    }
  }

  const Hypergraph& g_;
  std::vector<int> twin_;
  std::optional<CanonicalForm> best_;
  std::vector<Vertex> best_perm_;
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph& g) {
  CanonicalSearch s(g);
  s.run();
  return s.best();
}

std::vector<Vertex> canonical_labeling(const Hypergraph& g) {
  CanonicalSearch s(g);
  s.run();
  return s.best_labeling();
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperspec
