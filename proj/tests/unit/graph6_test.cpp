#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cliquemax/graph6.hpp"
#include "support/oracles.hpp"

using namespace cliquemax;

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  EXPECT_EQ(graph6_encode(complete(5)), "D~{");
  EXPECT_EQ(graph6_encode(complete(2)), "A_");
  EXPECT_EQ(graph6_encode(path(3)), "Bg");
  EXPECT_EQ(graph6_decode("D~{"), complete(5));
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph(trial % 63, 0.45, rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(graph6_decode(""), Graph6Error);
  EXPECT_THROW(graph6_decode("D~"), Graph6Error);    // too short
  EXPECT_THROW(graph6_decode("D~{?"), Graph6Error);  // too long
  EXPECT_THROW(graph6_decode("D~|"), Graph6Error);   // padding bits set
  EXPECT_THROW(graph6_decode("D~ "), Graph6Error);   // byte out of range
  EXPECT_THROW(graph6_decode("~??"), Graph6Error);   // large-size header
  EXPECT_THROW(graph6_encode(Graph(63)), Graph6Error);
}

TEST(Graph6, ReadsNewlineDelimitedFiles) {
  std::istringstream in(">>graph6<<D~{\n\nBg\r\n@\n");
  const auto graphs = read_graph6_lines(in);
  ASSERT_EQ(graphs.size(), 3U);
  EXPECT_EQ(graphs[0], complete(5));
  EXPECT_EQ(graphs[1], path(3));
  std::ostringstream out;
  write_graph6_lines(out, graphs);
  EXPECT_EQ(out.str(), "D~{\nBg\n@\n");
}
