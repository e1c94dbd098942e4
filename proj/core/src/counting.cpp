#include "cliquemax/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace cliquemax {

namespace {

// All counts below fit in 64 bits: a graph on at most 64 vertices has at most
// C(64, 32) < 2^64 cliques of any single order.
using Rows = std::array<std::uint64_t, kMaxVertices>;

// Relabels g along a degeneracy order (repeatedly remove a minimum-degree
// vertex) and keeps only edges towards later vertices.
Rows forward_rows_by_degeneracy(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> position{};
  std::uint64_t remaining = g.vertices().bits();
  for (int next = 0; next < n; ++next) {
    int best = -1;
    int best_deg = kMaxVertices + 1;
    for (int v : VertexSet(remaining)) {
      const int d = std::popcount(g.row_unchecked(v) & remaining);
      if (d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    position[best] = next;
    remaining &= ~(std::uint64_t{1} << best);
  }
  Rows fwd{};
  for (int v = 0; v < n; ++v) {
    for (int w : VertexSet(g.row_unchecked(v))) {
      if (position[w] > position[v]) fwd[position[v]] |= std::uint64_t{1} << position[w];
    }
  }
  return fwd;
}

constexpr auto kPascal = [] {
  std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};
  for (int n = 0; n <= kMaxVertices; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}();

// True if the candidates are pairwise adjacent.
bool is_clique(const Rows& fwd, std::uint64_t candidates) {
  for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const std::uint64_t later = rest & (rest - 1);
    if ((fwd[v] & later) != later) return false;
  }
  return true;
}

std::uint64_t count_in(const Rows& fwd, std::uint64_t candidates, int k) {
  if (k == 0) return 1;
  const int p = std::popcount(candidates);
  if (k == 1) return static_cast<std::uint64_t>(p);
  if (is_clique(fwd, candidates)) return p >= k ? kPascal[p][k] : 0;
  std::uint64_t total = 0;
  for (; candidates != 0; candidates &= candidates - 1) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t next = candidates & fwd[v];
    if (std::popcount(next) >= k - 1) total += count_in(fwd, next, k - 1);
  }
  return total;
}

void spectrum_in(const Rows& fwd, std::uint64_t candidates, int size, std::uint64_t* counts) {
  const int p = std::popcount(candidates);
  if (is_clique(fwd, candidates)) {
    for (int j = 1; j <= p; ++j) counts[size + j] += kPascal[p][j];
    return;
  }
  counts[size + 1] += static_cast<std::uint64_t>(p);
  for (; candidates != 0; candidates &= candidates - 1) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t next = candidates & fwd[v];
    if (next != 0) spectrum_in(fwd, next, size + 1, counts);
  }
}

// Edges to higher-numbered vertices in the given labeling.
Rows forward_rows_natural(const Graph& g) {
  Rows fwd{};
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t above = v == 63 ? 0 : ~std::uint64_t{0} << (v + 1);
    fwd[v] = g.row_unchecked(v) & above;
  }
  return fwd;
}

BigInt sum_degree_products(const Graph& g) {
  const int n = g.order();
  BigInt sum = 0;
  for (int v = 0; v < n; ++v) {
    const int d = std::popcount(g.row_unchecked(v));
    sum += BigInt(d) * (n - 1 - d);
  }
  return sum;
}

}  // namespace

BigInt count_cliques(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("clique order must be nonnegative");
  if (t > g.order()) return 0;
  const Rows fwd = forward_rows_by_degeneracy(g);
  return BigInt(count_in(fwd, g.vertices().bits(), t));
}

std::vector<BigInt> clique_spectrum(const Graph& g) {
  const int n = g.order();
  std::array<std::uint64_t, kMaxVertices + 2> counts{};
  counts[0] = 1;
  if (n > 0) spectrum_in(forward_rows_by_degeneracy(g), g.vertices().bits(), 0, counts.data());
  std::vector<BigInt> out;
  out.reserve(n + 1);
  for (int t = 0; t <= n; ++t) out.emplace_back(counts[t]);
  return out;
}

CliqueProfile clique_profile(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("clique profile needs t >= 1");
  CliqueProfile profile;
  profile.t = t;
  profile.per_vertex.reserve(g.order());
  const Rows fwd = forward_rows_natural(g);
  for (int v = 0; v < g.order(); ++v) {
    profile.per_vertex.emplace_back(count_in(fwd, g.row_unchecked(v), t - 1));
  }
  profile.total = count_cliques(g, t);
  return profile;
}

BigInt count_independent_sets(const Graph& g, int t) { return count_cliques(complement(g), t); }

TriangleIdentity triangle_complement_identity(const Graph& g) {
  TriangleIdentity id;
  const int n = g.order();
  id.lhs = 2 * (binomial(n, 3) - (count_cliques(g, 3) + count_cliques(complement(g), 3)));
  id.rhs = sum_degree_products(g);
  id.holds = id.lhs == id.rhs;
  return id;
}

BigRational k3_upper_bound(const Graph& g) {
  return BigRational(binomial(g.order(), 3)) - BigRational(sum_degree_products(g), 2);
}

BigInt extremal_value_cliques(int max_degree, int b, int t) {
  if (max_degree < 0 || b < 0 || t < 0) throw std::invalid_argument("negative parameter");
  return binomial(max_degree + 1, t) + binomial(b, t);
}

BigInt extremal_value_independent(int n, int min_degree, int t) {
  if (n < 0 || min_degree < 0 || t < 0 || min_degree > n) throw std::invalid_argument("bad parameter");
  return binomial(min_degree, t) + binomial(n - min_degree, t);
}

bool closed_form_equality_check(int max_degree, int b, int t) {
  if (max_degree < 0 || b < 0 || t < 1) throw std::invalid_argument("bad parameter");
  const BigInt lhs = (max_degree + 1) * binomial(max_degree, t - 1) + b * binomial(b - 1, t - 1);
  const BigInt rhs = t * binomial(max_degree + 1, t) + t * binomial(b, t);
  return lhs == rhs;
}

BigRational degree_double_count_bound(int n, int max_degree, int t) {
  if (t < 1) throw std::invalid_argument("degree double count bound needs t >= 1");
  return BigRational(BigInt(n) * binomial(max_degree, t - 1), BigInt(t));
}

}  // namespace cliquemax
