#pragma once

#include <span>
#include <vector>

#include "cliquemax/algebra.hpp"
#include "cliquemax/graph.hpp"

namespace cliquemax {

/// Which piece of f_t produced a value.
enum class FtBranch { zero, kk };

/// f_t(x) = 0 if u(x) < t-2, else C(u(x), t-1). Bounds k_t(v) in terms of
/// x = k_3(v), the number of edges inside N(v).
struct FtBound {
  int t = 0;
  BigRational x;
  QuadraticNumber value;
  FtBranch branch = FtBranch::zero;
};

/// Requires x >= 0 and t >= 3. At u(x) = t-2 exactly both pieces agree on 0;
/// the branch is reported as kk.
FtBound f_t(const BigRational& x, int t);

/// Floating-point f_t'(x) from the product rule, for reports only.
double f_t_derivative(double x, int t);

/// Upper bound C(u(m), k) on the k-cliques of a graph with m edges, valid for
/// u(m) >= k-1; below that no k-clique fits and the bound is 0. Requires
/// k >= 3 and m >= 0.
QuadraticNumber kk_clique_bound(long long m, int k);

/// True maximum of k_k over graphs with exactly m edges on at most n_max
/// vertices, by exhaustive isomorph-free enumeration. n_max <= 10. Throws
/// std::invalid_argument when no such graph exists.
BigInt kk_oracle(long long m, int k, int n_max);

/// kk_oracle for every m in 0..C(n_max, 2) from a single enumeration.
std::vector<BigInt> kk_oracle_table(int k, int n_max);

struct ConvexityReport {
  int t = 0;
  std::size_t triples = 0;
  std::size_t pairs = 0;
  /// Every divided second difference is >= 0.
  bool convex = true;
  /// ... and > 0 at every middle point beyond C(t-2, 2).
  bool strictly_convex = true;
  bool monotone = true;
  /// f(x_i) < f(x_{i+1}) whenever x_{i+1} > C(t-2, 2).
  bool strictly_increasing = true;
  /// Middle points whose second difference is exactly zero.
  std::vector<BigRational> flat_points;
  /// Middle points with a negative second difference or left ends of a
  /// decreasing step.
  std::vector<BigRational> violations;
};

/// Checks convexity and monotonicity of f_t on consecutive grid triples using
/// exact signs. For a uniform grid the divided second difference is a
/// positive multiple of f(x-h) - 2 f(x) + f(x+h). Throws std::invalid_argument
/// unless the grid is strictly ascending and t >= 3.
ConvexityReport f_t_convexity_check(int t, std::span<const BigRational> grid);

/// k_t(v) <= f_t(k_3(v)) for every vertex, decided exactly.
bool vertex_clique_bound_check(const Graph& g, int t);

}  // namespace cliquemax
