#include <gtest/gtest.h>

#include <set>

#include "cliquemax/canonical.hpp"
#include "cliquemax/enumerate.hpp"
#include "support/oracles.hpp"

using namespace cliquemax;

namespace {

std::uint64_t oracle_count(const std::map<std::string, oracle::ClassInfo>& classes,
                           const std::function<bool(const oracle::ClassInfo&)>& keep) {
  std::uint64_t count = 0;
  for (const auto& [cert, info] : classes) count += keep(info);
  return count;
}

}  // namespace

TEST(Enumerate, CountsMatchLabeledOracleUnderEveryFilter) {
  for (int n = 1; n <= 6; ++n) {
    const auto classes = oracle::labeled_classes(n);
    for (int d = 0; d < n; ++d) {
      EXPECT_EQ(count_graphs(EnumerationConfig::max_degree(n, d)),
                oracle_count(classes, [&](const auto& c) { return c.max_degree <= d; }))
          << "n=" << n << " max " << d;
      EXPECT_EQ(count_graphs(EnumerationConfig::min_degree(n, d)),
                oracle_count(classes, [&](const auto& c) { return c.min_degree >= d; }))
          << "n=" << n << " min " << d;
    }
    for (int e = 0; e <= n * (n - 1) / 2; ++e) {
      EnumerationConfig config = EnumerationConfig::all_graphs(n);
      config.edge_count = e;
      EXPECT_EQ(count_graphs(config), oracle_count(classes, [&](const auto& c) { return c.edges == e; }));
    }
    EnumerationConfig connected = EnumerationConfig::all_graphs(n);
    connected.connected_only = true;
    EXPECT_EQ(count_graphs(connected), oracle_count(classes, [](const auto& c) { return c.connected; }));
  }
}

TEST(Enumerate, KnownTotals) {
  const std::vector<std::uint64_t> totals{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_graphs(EnumerationConfig::all_graphs(n)), totals[n - 1]);
  EXPECT_EQ(count_graphs(EnumerationConfig::max_degree(5, 2)), 11U);
}

TEST(Enumerate, EmitsCanonicalPairwiseNonIsomorphicGraphsInTheClass) {
  for (const EnumerationConfig& config :
       {EnumerationConfig::max_degree(7, 3), EnumerationConfig::min_degree(7, 3), EnumerationConfig::all_graphs(7)}) {
    std::set<std::string> seen;
    enumerate_graphs(config, [&](const Graph& g) {
      EXPECT_EQ(g.order(), 7);
      if (config.degree_mode == DegreeMode::max_at_most) {
        EXPECT_LE(*max_degree(g), config.degree_bound);
        EXPECT_EQ(canonical_labeling(g).canonical, g);
      } else {
        EXPECT_GE(*min_degree(g), config.degree_bound);
      }
      EXPECT_TRUE(seen.insert(canonical_form(g).certificate).second);
    });
  }
}

TEST(Enumerate, SplitTasksConcatenateToTheFullStream) {
  for (const EnumerationConfig& config : {EnumerationConfig::max_degree(8, 3), EnumerationConfig::min_degree(8, 2)}) {
    const std::vector<Graph> all = collect_graphs(config);
    for (int depth = 0; depth < config.n; depth += 3) {
      std::vector<Graph> joined;
      for (const auto& task : split_tasks(config, depth)) run_task(task, [&](const Graph& g) { joined.push_back(g); });
      EXPECT_EQ(joined, all) << "depth " << depth;
    }
  }
  EXPECT_THROW(split_tasks(EnumerationConfig::all_graphs(5), 5), std::invalid_argument);
}

TEST(Enumerate, InadmissiblePrefixYieldsNothing) {
  const EnumerationConfig config = EnumerationConfig::max_degree(6, 1);
  std::uint64_t count = 0;
  run_task(EnumerationTask{complete(3), config}, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 0U);
}

TEST(Enumerate, ValidatesConfigs) {
  EXPECT_THROW(count_graphs(EnumerationConfig::all_graphs(0)), std::invalid_argument);
  EXPECT_THROW(count_graphs(EnumerationConfig::all_graphs(17)), std::invalid_argument);
  EXPECT_THROW(count_graphs(EnumerationConfig::max_degree(5, 5)), std::invalid_argument);
  EXPECT_THROW(count_graphs(EnumerationConfig::min_degree(5, -1)), std::invalid_argument);
  EnumerationConfig config = EnumerationConfig::all_graphs(4);
  config.edge_count = 7;
  EXPECT_THROW(count_graphs(config), std::invalid_argument);
  EXPECT_EQ(EnumerationConfig::max_degree(6, 2).describe(), "n=6;max_at_most=2;edges=*;connected=0");
}

TEST(Enumerate, ConnectivityHelper) {
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(cycle(9)));
  EXPECT_FALSE(is_connected(disjoint_union(cycle(3), cycle(3))));
}
