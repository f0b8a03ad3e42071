#include "hyperspec/parity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

constexpr int kBruteForceLimit = 24;

// Dense GF(2) row: `cols` coefficient bits followed by one right-hand-side bit.
class Gf2System {
 public:
  explicit Gf2System(int cols) : cols_(cols), words_((cols + 1 + 63) / 64) {}

  void add_equation(const std::vector<int>& vars, bool rhs) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(words_), 0);
    for (int v : vars) flip(row, v);
    if (rhs) flip(row, cols_);
    rows_.push_back(std::move(row));
  }

  // Gauss-Jordan elimination, pivots taken in column order. Free variables
  // are 0 in the returned solution.
  std::optional<std::vector<std::uint8_t>> solve() {
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < cols_ && rank < rows_.size(); ++c) {
      std::size_t p = rank;
      while (p < rows_.size() && !bit(rows_[p], c)) ++p;
      if (p == rows_.size()) continue;
      std::swap(rows_[p], rows_[rank]);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r != rank && bit(rows_[r], c)) xor_into(rows_[r], rows_[rank]);
      }
      pivot_col.push_back(c);
      ++rank;
    }
    for (std::size_t r = rank; r < rows_.size(); ++r) {
      if (bit(rows_[r], cols_)) return std::nullopt;  // 0 = 1
    }
    std::vector<std::uint8_t> y(static_cast<std::size_t>(cols_), 0);
    for (std::size_t r = 0; r < rank; ++r) y[pivot_col[r]] = bit(rows_[r], cols_) ? 1 : 0;
    return y;
  }

 private:
  static bool bit(const std::vector<std::uint64_t>& row, int i) { return (row[i / 64] >> (i % 64)) & 1U; }
  static void flip(std::vector<std::uint64_t>& row, int i) { row[i / 64] ^= std::uint64_t{1} << (i % 64); }
  static void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
  }

  int cols_;
  int words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

std::vector<std::uint32_t> edge_masks(const Hypergraph& g) {
  std::vector<std::uint32_t> masks;
  masks.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= std::uint32_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

void require_brute_force_size(const Hypergraph& g) {
  if (g.num_vertices() > kBruteForceLimit) {
    throw Error(Errc::TooLarge, "exhaustive search limited to " + std::to_string(kBruteForceLimit) +
                                    " vertices, got " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

Bipartition Bipartition::complement() const {
  Bipartition out = *this;
  for (auto& b : out.in_first) b = b ? 0 : 1;
  return out;
}

std::string Bipartition::to_string() const {
  std::string s;
  s.reserve(in_first.size());
  for (auto b : in_first) s += b ? '1' : '0';
  return s;
}

Bipartition Bipartition::from_string(const std::string& bits) {
  Bipartition b;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(Errc::InvalidBipartition, "expected 0/1 string");
    b.in_first.push_back(c == '1' ? 1 : 0);
  }
  return b;
}

std::optional<Bipartition> find_odd_bipartition(const Hypergraph& g, std::optional<Vertex> force_in_first) {
  if (g.uniformity() % 2 != 0) {
    throw Error(Errc::OddUniformity, "odd-bipartiteness is defined for even k, got " +
                                         std::to_string(g.uniformity()));
  }
  Gf2System system(g.num_vertices());
  for (const Edge& e : g.edges()) system.add_equation(e, true);
  if (force_in_first) {
    if (!g.contains(*force_in_first)) throw Error(Errc::VertexOutOfRange, "forced vertex");
    system.add_equation({*force_in_first}, true);
  }
  auto y = system.solve();
  if (!y) return std::nullopt;
  return Bipartition{std::move(*y)};
}

bool is_odd_bipartite(const Hypergraph& g) { return find_odd_bipartition(g).has_value(); }

bool verify_odd_bipartition(const Hypergraph& g, const Bipartition& b) {
  if (b.size() != g.num_vertices()) return false;
  for (const Edge& e : g.edges()) {
    int hits = 0;
    for (Vertex v : e) hits += b.contains(v) ? 1 : 0;
    if (hits % 2 == 0) return false;
  }
  return true;
}

bool brute_force_odd_bipartite(const Hypergraph& g) {
  require_brute_force_size(g);
  const auto masks = edge_masks(g);
  const std::uint32_t subsets = std::uint32_t{1} << g.num_vertices();
  for (std::uint32_t s = 0; s < subsets; ++s) {
    bool ok = true;
    for (auto m : masks) {
      if ((std::popcount(m & s) & 1) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

OddTransversalResult odd_transversal_subhypergraph(const Hypergraph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  std::vector<Vertex> sequence = order;
  if (sequence.empty()) {
    sequence.resize(static_cast<std::size_t>(n));
    std::iota(sequence.begin(), sequence.end(), 0);
  }
  if (static_cast<int>(sequence.size()) != n) throw Error(Errc::DimensionMismatch, "vertex order");

  // Per edge: number of undecided vertices and parity of |e ∩ T| so far.
  std::vector<int> undecided;
  std::vector<int> parity(g.edges().size(), 0);
  for (const Edge& e : g.edges()) undecided.push_back(static_cast<int>(e.size()));

  Bipartition t{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
  for (Vertex v : sequence) {
    // Only edges that become fully decided change the (doubled) expectation:
    // from 1 to 2·[odd]. Compare the two choices on those edges.
    int gain_in = 0, gain_out = 0;
    for (int id : g.incident(v)) {
      if (undecided[id] != 1) continue;
      gain_in += (parity[id] ^ 1) ? 1 : 0;
      gain_out += parity[id] ? 1 : 0;
    }
    const bool put_in = gain_in > gain_out;
    t.in_first[v] = put_in ? 1 : 0;
    for (int id : g.incident(v)) {
      --undecided[id];
      if (put_in) parity[id] ^= 1;
    }
  }

  OddTransversalResult out{std::move(t), {}, 0};
  for (int id = 0; id < g.num_edges(); ++id) {
    if (parity[id]) out.kept_edges.push_back(id);
  }
  out.count = static_cast<int>(out.kept_edges.size());
  return out;
}

int max_odd_transversal_brute_force(const Hypergraph& g) {
  require_brute_force_size(g);
  const auto masks = edge_masks(g);
  const std::uint32_t subsets = std::uint32_t{1} << g.num_vertices();
  int best = 0;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    int count = 0;
    for (auto m : masks) count += std::popcount(m & s) & 1;
    best = std::max(best, count);
  }
  return best;
}

}  // namespace hyperspec
