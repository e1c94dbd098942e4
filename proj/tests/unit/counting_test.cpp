#include <gtest/gtest.h>

#include <random>

#include "cliquemax/counting.hpp"
#include "cliquemax/enumerate.hpp"
#include "support/oracles.hpp"

using namespace cliquemax;

TEST(CountCliques, CompleteGraphsGiveBinomials) {
  for (int n = 0; n <= 20; ++n) {
    for (int t = 0; t <= n + 1; ++t) EXPECT_EQ(count_cliques(complete(n), t), binomial(n, t));
  }
  EXPECT_EQ(count_cliques(complete(64), 32), binomial(64, 32));
  EXPECT_THROW(count_cliques(complete(3), -1), std::invalid_argument);
}

TEST(CountCliques, SmallOrdersAreConventional) {
  const Graph g = cycle(5);
  EXPECT_EQ(count_cliques(g, 0), 1);
  EXPECT_EQ(count_cliques(g, 1), 5);
  EXPECT_EQ(count_cliques(g, 2), 5);
  EXPECT_EQ(count_cliques(g, 3), 0);
  EXPECT_EQ(count_cliques(Graph(0), 0), 1);
  EXPECT_EQ(count_cliques(Graph(0), 1), 0);
}

TEST(CountCliques, MatchesListingOracleOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 18;
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 7) / 6.0, rng);
    const auto spectrum = clique_spectrum(g);
    ASSERT_EQ(spectrum.size(), static_cast<std::size_t>(n + 1));
    for (int t = 0; t <= n; ++t) {
      const BigInt expected = t == 0 ? 1 : BigInt(oracle::cliques(g, t));
      EXPECT_EQ(count_cliques(g, t), expected);
      EXPECT_EQ(spectrum[t], expected);
    }
  }
}

TEST(CliqueProfile, PerVertexCountsMatchOracleAndHandshake) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 14, 0.6, rng);
    for (int t = 1; t <= 5; ++t) {
      const CliqueProfile p = clique_profile(g, t);
      const auto per = oracle::cliques_per_vertex(g, t);
      BigInt sum = 0;
      for (int v = 0; v < g.order(); ++v) {
        EXPECT_EQ(p.per_vertex[v], per[v]);
        sum += p.per_vertex[v];
      }
      EXPECT_EQ(sum, t * p.total);
      EXPECT_EQ(p.total, oracle::cliques(g, t));
    }
  }
  EXPECT_THROW(clique_profile(complete(3), 0), std::invalid_argument);
}

TEST(IndependentSets, AreCliquesOfTheComplement) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(10, 0.5, rng);
    for (int t = 0; t <= 5; ++t) {
      const BigInt expected = t == 0 ? 1 : BigInt(oracle::cliques(oracle::complement(g), t));
      EXPECT_EQ(count_independent_sets(g, t), expected);
    }
  }
  EXPECT_EQ(count_independent_sets(complete_bipartite(3, 4), 3), 1 + 4);
}

TEST(TriangleIdentity, HoldsWithIndependentTriangleCounts) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 33;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (trial % 9) / 8.0, rng);
    const TriangleIdentity id = triangle_complement_identity(g);
    EXPECT_TRUE(id.holds);
    const BigInt tri = oracle::triangles(g) + oracle::triangles(oracle::complement(g));
    EXPECT_EQ(id.lhs, 2 * (BigInt(oracle::binomial(n, 3)) - tri));
    BigInt rhs = 0;
    for (int v = 0; v < n; ++v) rhs += degree(g, v) * (n - 1 - degree(g, v));
    EXPECT_EQ(id.rhs, rhs);
  }
}

TEST(TriangleBound, TightExactlyWhenComplementIsTriangleFree) {
  enumerate_graphs(EnumerationConfig::all_graphs(6), [](const Graph& g) {
    const BigRational bound = k3_upper_bound(g);
    const BigRational k3(count_cliques(g, 3));
    EXPECT_LE(k3, bound);
    EXPECT_EQ(k3 == bound, oracle::triangles(oracle::complement(g)) == 0);
  });
}

TEST(ExtremalValues, MatchDirectCounts) {
  for (int d = 1; d <= 7; ++d) {
    for (int b = 0; b <= d + 1; ++b) {
      const Graph g = extremal_cliques(1, d, b);
      for (int t = 3; t <= 9; ++t) EXPECT_EQ(extremal_value_cliques(d, b, t), count_cliques(g, t));
    }
  }
  for (int n = 2; n <= 12; ++n) {
    for (int delta = 1; 2 * delta <= n; ++delta) {
      const Graph g = complete_bipartite(delta, n - delta);
      for (int t = 1; t <= n; ++t) EXPECT_EQ(extremal_value_independent(n, delta, t), count_independent_sets(g, t));
    }
  }
}

TEST(ClosedForm, EqualityHoldsOnGrid) {
  for (int d = 0; d <= 20; ++d) {
    for (int b = 0; b <= d + 1; ++b) {
      for (int t = 1; t <= 21; ++t) EXPECT_TRUE(closed_form_equality_check(d, b, t)) << d << ' ' << b << ' ' << t;
    }
  }
}

TEST(DoubleCountBound, BoundsBoundedDegreeGraphs) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 12;
    const int d = 1 + trial % 5;
    const Graph g = oracle::random_bounded_graph(n, d, rng);
    for (int t = 1; t <= 5; ++t) EXPECT_LE(BigRational(count_cliques(g, t)), degree_double_count_bound(n, d, t));
  }
  EXPECT_EQ(degree_double_count_bound(6, 2, 3), BigRational(2));
  EXPECT_THROW(degree_double_count_bound(6, 2, 0), std::invalid_argument);
}
