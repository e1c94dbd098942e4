#include <gtest/gtest.h>

#include <random>

#include "cliquemax/counting.hpp"
#include "cliquemax/enumerate.hpp"
#include "cliquemax/kk_bounds.hpp"
#include "cliquemax/smoothing.hpp"

using namespace cliquemax;

namespace {

BigRational expected_objective(int d, int b, int t) { return BigRational(t * (binomial(d + 1, t) + binomial(b, t))); }

void expect_monotone(const SmoothingResult& r) {
  for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
    EXPECT_GE((r.objective_trace[i] - r.objective_trace[i - 1]).sign(), 0) << "step " << i;
  }
}

}  // namespace

TEST(Smoothing, StateFromParameters) {
  const SmoothingState s = SmoothingState::from_parameters(4, 3, 4, std::vector<BigRational>(8, BigRational(3)));
  EXPECT_EQ(s.lo, 1);
  EXPECT_EQ(s.hi, 6);
  EXPECT_EQ(s.target_sum, 33);
  EXPECT_THROW(SmoothingState::from_parameters(4, 3, 4, std::vector<BigRational>(7)), std::invalid_argument);
  EXPECT_THROW(SmoothingState::from_parameters(4, 6, 4, std::vector<BigRational>(11)), std::invalid_argument);
  EXPECT_THROW(SmoothingState::from_parameters(4, 3, 2, std::vector<BigRational>(8)), std::invalid_argument);
}

TEST(Smoothing, ExtremeStateIsAFixedPoint) {
  std::vector<BigRational> xs(5, BigRational(6));
  xs.insert(xs.end(), 3, BigRational(1));
  const SmoothingResult r = smooth_to_extreme(SmoothingState::from_parameters(4, 3, 4, xs));
  EXPECT_EQ(r.push_steps, 0U);
  EXPECT_EQ(r.raise_steps, 0U);
  EXPECT_EQ(r.objective_trace.size(), 1U);
  EXPECT_EQ(r.final_xs, xs);
  EXPECT_EQ(r.final_objective, BigRational(20));
}

TEST(Smoothing, RandomStatesReachTheExtremeObjective) {
  std::mt19937_64 rng(16);
  for (auto [d, b, t] : std::vector<std::array<int, 3>>{{4, 3, 4}, {5, 2, 5}, {6, 6, 4}, {3, 1, 3}, {7, 4, 6}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SmoothingState s = random_state(d, b, t, rng);
      BigRational sum = 0;
      for (const auto& x : s.xs) {
        EXPECT_GE(x, s.lo);
        EXPECT_LE(x, s.hi);
        sum += x;
      }
      EXPECT_LE(sum, s.target_sum);
      const SmoothingResult r = smooth_to_extreme(s);
      EXPECT_TRUE(r.trace_nondecreasing);
      expect_monotone(r);
      EXPECT_LE(r.push_steps + 1, s.xs.size());
      EXPECT_EQ(r.entries_at_hi, static_cast<std::size_t>(s.hi == s.lo ? s.xs.size() : d + 1));
      EXPECT_EQ(r.final_objective, expected_objective(d, b, t));
    }
  }
}

TEST(Smoothing, StartsFromTriangleProfiles) {
  // Profiles below lo are lifted first; the sum never exceeds the target
  // because k_3(G) <= C(D+1,3) + C(b,3) on this class.
  int runs = 0;
  enumerate_graphs(EnumerationConfig::max_degree(8, 4), [&](const Graph& g) {
    if (++runs % 40 != 0) return;
    std::vector<BigRational> xs;
    for (const auto& k : clique_profile(g, 3).per_vertex) xs.emplace_back(k);
    const SmoothingResult r = smooth_to_extreme(SmoothingState::from_parameters(4, 3, 4, xs));
    EXPECT_TRUE(r.trace_nondecreasing);
    EXPECT_EQ(r.final_objective, expected_objective(4, 3, 4));
  });
  EXPECT_GT(runs, 1000);
}

TEST(Smoothing, PushingEqualEntriesApartNeverLowersTheObjective) {
  for (int t = 3; t <= 6; ++t) {
    for (int x = 2; x <= 20; ++x) {
      for (const BigRational eps : {BigRational(1, 7), BigRational(1, 2), BigRational(1)}) {
        SurdSum before;
        before.add(f_t(BigRational(x), t).value, 2);
        SurdSum after;
        after.add(f_t(BigRational(x) + eps, t).value);
        after.add(f_t(BigRational(x) - eps, t).value);
        EXPECT_GE((after - before).sign(), 0) << "t=" << t << " x=" << x;
      }
    }
  }
}

TEST(Smoothing, InfeasibleStates) {
  SmoothingState s = SmoothingState::from_parameters(4, 3, 4, std::vector<BigRational>(8, BigRational(3)));
  s.xs[0] = 7;
  EXPECT_THROW(smooth_to_extreme(s), InfeasibleState);
  s.xs.assign(8, BigRational(5));  // sum 40 > 33
  EXPECT_THROW(smooth_to_extreme(s), InfeasibleState);
  s.xs.assign(8, BigRational(3));
  s.target_sum = 49;  // more than 8 * 6
  EXPECT_THROW(smooth_to_extreme(s), InfeasibleState);
}

TEST(EndpointLemma, AcceptsEndpointsAndSeparatesErrorKinds) {
  const std::vector<BigRational> two{1, 1, 0, 0};
  EXPECT_TRUE(endpoint_lemma_check(two, 2));
  const std::vector<BigRational> three{1, 1, 1, 0, 0};
  EXPECT_TRUE(endpoint_lemma_check(three, 3));
  const std::vector<BigRational> halves{BigRational(1), BigRational(1, 2), BigRational(1, 2)};
  EXPECT_THROW(endpoint_lemma_check(halves, 2), EndpointPreconditionError);
  const std::vector<BigRational> outside{BigRational(2), BigRational(0)};
  EXPECT_THROW(endpoint_lemma_check(outside, 2), EndpointPreconditionError);
  EXPECT_THROW(endpoint_lemma_check(two, 3), EndpointPreconditionError);
  // With integer k a single fractional entry cannot occur; any report of one
  // would be a lemma violation rather than a bad input.
  const std::vector<BigRational> single{BigRational(1), BigRational(1, 2)};
  EXPECT_THROW(endpoint_lemma_check(single, 1), EndpointPreconditionError);
}
