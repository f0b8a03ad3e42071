#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "generators.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/hgf.hpp"

using namespace hyperspec;

TEST(Hgf, ParsesCommentsAndBlankLines) {
  const auto g = parse_hgf("# K5^(4) minus one edge\n\n4 5 2\n0 1 2 3\n# mid\n4 3 2 1\n\n");
  EXPECT_EQ(g.uniformity(), 4);
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.edge(1), (Edge{1, 2, 3, 4}));
}

TEST(Hgf, WriterSortsEdges) {
  Hypergraph g(4, 6, {{2, 3, 4, 5}, {0, 1, 2, 3}});
  EXPECT_EQ(to_hgf(g), "4 6 2\n0 1 2 3\n2 3 4 5\n");
}

TEST(Hgf, ErrorsCarryLineNumbers) {
  try {
    parse_hgf("4 5 2\n0 1 2 3\n0 1 2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonUniformEdge);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_hgf("4 5 1\n0 1 2 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  try {
    parse_hgf("4 5 2\n0 1 2 3\n3 2 1 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateEdge);
  }
  try {
    parse_hgf("2 3 1\n0 3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexOutOfRange);
  }
}

TEST(Hgf, EdgeCountMustMatchHeader) {
  EXPECT_THROW(parse_hgf("4 5 2\n0 1 2 3\n"), Error);
  EXPECT_THROW(parse_hgf("4 5 1\n0 1 2 3\n1 2 3 4\n"), Error);
  EXPECT_THROW(parse_hgf("# nothing\n"), Error);
  EXPECT_THROW(read_hgf_file("/nonexistent/file.hgf"), Error);
}

TEST(Hgf, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = gen::random_connected(rng, trial % 2 ? 4 : 6, 13, 5);
    const std::string text = to_hgf(g);
    const auto h = parse_hgf(text);
    EXPECT_EQ(to_hgf(h), text);
    EXPECT_EQ(h.num_edges(), g.num_edges());
  }
}
