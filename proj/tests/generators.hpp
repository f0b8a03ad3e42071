#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec::gen {

// Random connected k-uniform hypergraph on n vertices with about `extra`
// edges beyond a spanning set. Each spanning edge reuses one covered vertex.
inline Hypergraph random_connected(std::mt19937_64& rng, int k, int n, int extra) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::set<Edge> edges;
  std::vector<int> covered;
  std::size_t next = 0;
  auto pick_other = [&](Edge& e) {
    std::uniform_int_distribution<int> any(0, n - 1);
    while (static_cast<int>(e.size()) < k) {
      const int v = any(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
  };
  while (next < order.size()) {
    Edge e;
    if (!covered.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, covered.size() - 1);
      e.push_back(covered[pick(rng)]);
    }
    while (static_cast<int>(e.size()) < k && next < order.size()) e.push_back(order[next++]);
    pick_other(e);
    for (int v : e) covered.push_back(v);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  const std::size_t target = edges.size() + static_cast<std::size_t>(extra);
  for (int tries = 0; tries < 50 * (extra + 1) && edges.size() < target; ++tries) {
    Edge e;
    pick_other(e);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  return Hypergraph(k, n, {edges.begin(), edges.end()});
}

// Connected and odd-bipartite by construction: a hidden V1 is drawn first and
// every edge meets it an odd number of times.
inline Hypergraph random_odd_bipartite(std::mt19937_64& rng, int k, int n, int num_edges) {
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> in_first(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) in_first[v] = coin(rng);
  in_first[0] = true;
  in_first[n - 1] = false;

  std::uniform_int_distribution<int> any(0, n - 1);
  auto fix_parity = [&](Edge& e) {
    int odd = 0;
    for (int v : e) odd ^= in_first[v] ? 1 : 0;
    if (odd) return true;
    // Swap a non-anchor vertex for one from the other side.
    for (std::size_t i = 1; i < e.size(); ++i) {
      for (int w = 0; w < n; ++w) {
        if (in_first[w] != in_first[e[i]] && std::find(e.begin(), e.end(), w) == e.end()) {
          e[i] = w;
          return true;
        }
      }
    }
    return false;
  };

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<Edge> edges;
    std::vector<int> covered{any(rng)};
    for (int tries = 0; tries < 200 * num_edges && static_cast<int>(edges.size()) < num_edges; ++tries) {
      Edge e{covered[std::uniform_int_distribution<std::size_t>(0, covered.size() - 1)(rng)]};
      while (static_cast<int>(e.size()) < k) {
        const int v = any(rng);
        if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
      }
      if (!fix_parity(e)) continue;
      std::sort(e.begin(), e.end());
      if (edges.insert(e).second) covered.insert(covered.end(), e.begin(), e.end());
    }
    Hypergraph g(k, n, {edges.begin(), edges.end()});
    if (is_connected(g)) return g;
  }
  // Fallback: a hyperpath, odd-bipartite for every even k.
  return hyperpath((n - 1) / (k - 1), k);
}

// Random x with entries in [-1, 1], bounded away from zero in norm.
inline std::vector<double> random_vector(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = u(rng);
  x[0] = 0.5 + 0.5 * std::abs(x[0]);
  return x;
}

}  // namespace hyperspec::gen
