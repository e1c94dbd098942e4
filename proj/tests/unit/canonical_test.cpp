#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "cliquemax/canonical.hpp"
#include "support/oracles.hpp"

using namespace cliquemax;

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 16;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (trial % 5) / 4.0, rng);
    const Graph h = relabel(g, oracle::random_permutation(n, rng));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_EQ(canonical_labeling(g).canonical, canonical_labeling(h).canonical);
  }
}

TEST(Canonical, HardRegularFamilies) {
  // Vertex-transitive and strongly regular inputs exercise the search.
  std::mt19937_64 rng(12);
  std::vector<Graph> graphs{cycle(16), complete_bipartite(8, 8), disjoint_union(cycle(8), cycle(8)),
                            disjoint_union(complete(4), disjoint_union(complete(4), complete(4)))};
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    petersen.add_edge(i, i + 5);
  }
  graphs.push_back(petersen);
  Graph rook(16);  // 4x4 rook graph, strongly regular (16, 6, 2, 2)
  Graph shrikhande(16);  // same parameters, not isomorphic to the rook graph
  for (int u = 0; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) {
      if (u / 4 == v / 4 || u % 4 == v % 4) rook.add_edge(u, v);
      const int di = (v / 4 - u / 4 + 4) % 4;
      const int dj = (v % 4 - u % 4 + 4) % 4;
      const bool adjacent = (di == 0 && (dj == 1 || dj == 3)) || (dj == 0 && (di == 1 || di == 3)) ||
                            (di == 1 && dj == 1) || (di == 3 && dj == 3);
      if (adjacent) shrikhande.add_edge(u, v);
    }
  }
  graphs.push_back(rook);
  graphs.push_back(shrikhande);
  for (const Graph& g : graphs) {
    for (int trial = 0; trial < 10; ++trial) {
      EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, oracle::random_permutation(g.order(), rng))));
    }
  }
  EXPECT_FALSE(isomorphic(rook, shrikhande));
  EXPECT_FALSE(isomorphic(cycle(16), disjoint_union(cycle(8), cycle(8))));
}

TEST(Canonical, SeparatesExactlyTheBruteForceClasses) {
  for (int n = 1; n <= 6; ++n) {
    const auto classes = oracle::labeled_classes(n);
    std::set<std::string> ours;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v) {
      for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    }
    std::map<std::string, std::string> brute_to_ours;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
      }
      const std::string cert = canonical_form(g).certificate;
      ours.insert(cert);
      if (n <= 5) {
        const auto [it, inserted] = brute_to_ours.emplace(oracle::certificate(g), cert);
        EXPECT_EQ(it->second, cert);
      }
    }
    EXPECT_EQ(ours.size(), classes.size()) << "n=" << n;
  }
}

TEST(Canonical, PositionIsAPermutationProducingTheCanonicalGraph) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 16;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const CanonicalLabeling lab = canonical_labeling(g);
    std::vector<int> perm(lab.position.begin(), lab.position.begin() + n);
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) ASSERT_EQ(sorted[i], i);
    EXPECT_EQ(relabel(g, perm), lab.canonical);
  }
}

TEST(Canonical, OrbitsMatchBruteForce) {
  std::mt19937_64 rng(14);
  std::vector<Graph> graphs{cycle(7), path(6), complete_bipartite(2, 5), disjoint_union(complete(3), path(3))};
  for (int trial = 0; trial < 150; ++trial) graphs.push_back(oracle::random_graph(1 + trial % 8, 0.4, rng));
  for (const Graph& g : graphs) {
    const CanonicalLabeling lab = canonical_labeling(g);
    const auto expected = oracle::orbits(g);
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(lab.orbit[v], expected[v]) << " v=" << v;
  }
}

TEST(Canonical, LimitsAndEdgeCases) {
  EXPECT_THROW(canonical_labeling(Graph(17)), GraphError);
  EXPECT_EQ(canonical_form(Graph(0)).certificate, "?");
  EXPECT_TRUE(isomorphic(path(4), relabel(path(4), std::vector<int>{3, 1, 0, 2})));
  EXPECT_FALSE(isomorphic(path(4), Graph(3)));
}
