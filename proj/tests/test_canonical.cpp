#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "generators.hpp"
#include "hyperspec/canonical.hpp"

using namespace hyperspec;

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = trial % 3 == 0 ? 2 : 4;
    const auto g = gen::random_connected(rng, k, 11, 3);
    std::vector<Vertex> perm(11);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, perm)));
  }
}

TEST(Canonical, LabelingProducesForm) {
  std::mt19937_64 rng(23);
  const auto g = gen::random_connected(rng, 4, 10, 4);
  const auto perm = canonical_labeling(g);
  const auto h = relabel(g, perm);
  const auto form = canonical_form(g);
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(edges, form.edges);
}

TEST(Canonical, SmallHypertrees) {
  // Two edges sharing a vertex: path and star coincide.
  EXPECT_TRUE(are_isomorphic(hyperpath(2, 4), hyperstar(2, 4)));
  EXPECT_FALSE(are_isomorphic(hyperpath(3, 4), hyperstar(3, 4)));
  std::vector<std::pair<int, int>> spider{{0, 1}, {1, 2}, {1, 3}};
  EXPECT_TRUE(are_isomorphic(power_hypertree(spider, 4), hyperstar(3, 4)));
}

TEST(Canonical, DistinguishesAttachmentVertex) {
  const auto k5 = complete_hypergraph(5, 4);
  const auto a = coalesce(k5, 0, hyperpath(2, 4), 0).composed;
  const auto b = coalesce(coalesce(k5, 0, hyperpath(1, 4), 0).composed, 1, hyperpath(1, 4), 0).composed;
  EXPECT_EQ(a.num_edges(), b.num_edges());
  EXPECT_EQ(a.num_vertices(), b.num_vertices());
  EXPECT_FALSE(are_isomorphic(a, b));
  // Which K5 vertex hosts the path does not matter.
  EXPECT_TRUE(are_isomorphic(a, coalesce(k5, 3, hyperpath(2, 4), 0).composed));
  // Nor does which pendent vertex of the first edge carries the second one.
  const auto c1 = coalesce(coalesce(k5, 0, hyperpath(1, 4), 0).composed, 5, hyperpath(1, 4), 0).composed;
  const auto c2 = coalesce(coalesce(k5, 0, hyperpath(1, 4), 0).composed, 7, hyperpath(1, 4), 0).composed;
  EXPECT_TRUE(are_isomorphic(c1, c2));
  EXPECT_TRUE(are_isomorphic(c1, a));
}

TEST(Canonical, DifferentSizesNeverIsomorphic) {
  EXPECT_FALSE(are_isomorphic(hyperpath(2, 4), hyperpath(2, 6)));
  EXPECT_FALSE(are_isomorphic(hyperpath(2, 4), hyperpath(3, 4)));
}

TEST(Canonical, HighlySymmetricInputs) {
  // Every vertex of K_n^(k) is equivalent; the search must still finish fast.
  const auto k7 = complete_hypergraph(7, 4);
  std::vector<Vertex> perm{6, 5, 4, 3, 2, 1, 0};
  EXPECT_EQ(canonical_form(k7), canonical_form(relabel(k7, perm)));
  const auto s = hyperstar(5, 4);
  EXPECT_TRUE(are_isomorphic(s, relabel(s, [&] {
                                 std::vector<Vertex> p(static_cast<std::size_t>(s.num_vertices()));
                                 std::iota(p.rbegin(), p.rend(), 0);
                                 return p;
                               }())));
}
