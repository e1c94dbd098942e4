#pragma once

#include <vector>

#include "cliquemax/algebra.hpp"
#include "cliquemax/graph.hpp"

namespace cliquemax {

/// k_t(v) for every vertex together with k_t(G).
struct CliqueProfile {
  int t = 0;
  std::vector<BigInt> per_vertex;
  BigInt total;

  bool operator==(const CliqueProfile&) const = default;
};

/// k_t(G). k_0 = 1 (the empty clique), k_1 = n, k_2 = |E|, 0 for t > n.
/// Counted by recursive intersection of forward neighbour masks along a
/// degeneracy order. Throws std::invalid_argument for t < 0.
BigInt count_cliques(const Graph& g, int t);

/// k_0(G), ..., k_n(G) in one pass over all cliques.
std::vector<BigInt> clique_spectrum(const Graph& g);

/// Requires t >= 1. total is counted independently of per_vertex so the
/// handshake identity sum(per_vertex) = t * total is a real check.
CliqueProfile clique_profile(const Graph& g, int t);

/// i_t(G) = k_t(complement(G)).
BigInt count_independent_sets(const Graph& g, int t);

struct TriangleIdentity {
  BigInt lhs;  // 2 [C(n,3) - (k_3(G) + k_3(complement G))]
  BigInt rhs;  // sum_v d(v) (n - 1 - d(v))
  bool holds = false;
};

TriangleIdentity triangle_complement_identity(const Graph& g);

/// C(n,3) - (1/2) sum_v d(v)(n-1-d(v)); equals k_3(G) iff the complement is
/// triangle-free.
BigRational k3_upper_bound(const Graph& g);

/// C(max_degree+1, t) + C(b, t): k_t(K_{max_degree+1} + K_b).
BigInt extremal_value_cliques(int max_degree, int b, int t);
/// C(min_degree, t) + C(n - min_degree, t): i_t(K_{min_degree, n-min_degree}).
BigInt extremal_value_independent(int n, int min_degree, int t);

/// (D+1) C(D, t-1) + b C(b-1, t-1) == t C(D+1, t) + t C(b, t) with D the
/// maximum degree.
bool closed_form_equality_check(int max_degree, int b, int t);

/// (n/t) C(max_degree, t-1): bounds k_t of any n-vertex graph with maximum
/// degree at most max_degree, since k_t(v) <= C(d(v), t-1). Requires t >= 1.
BigRational degree_double_count_bound(int n, int max_degree, int t);

}  // namespace cliquemax
