#include "cliquemax/graph.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace cliquemax {

namespace {

void check_order(long long n) {
  if (n < 0) throw GraphError("negative vertex count");
  if (n > kMaxVertices) throw GraphError("graph exceeds 64 vertices");
}

// Copies the bits of `value` selected by `mask` into the low bits, in order.
std::uint64_t compress_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  int pos = 0;
  for (; mask != 0; mask &= mask - 1, ++pos) {
    if (value & mask & (~mask + 1)) out |= std::uint64_t{1} << pos;
  }
  return out;
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  check_order(static_cast<long long>(rows.size()));
  Graph g(static_cast<int>(rows.size()));
  const std::uint64_t valid = VertexSet::first(g.n_).bits();
  for (int v = 0; v < g.n_; ++v) {
    const std::uint64_t r = rows[v];
    if (r & ~valid) throw GraphError("adjacency row has bits beyond vertex count");
    if ((r >> v) & 1U) throw GraphError("loop at vertex " + std::to_string(v));
    g.adj_[v] = r;
  }
  for (int v = 0; v < g.n_; ++v) {
    for (int w : VertexSet(g.adj_[v])) {
      if (!((g.adj_[w] >> v) & 1U)) throw GraphError("adjacency is not symmetric");
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw GraphError("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::first(n).bits();
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    rows[v] = ~g.row_unchecked(v) & all & ~(std::uint64_t{1} << v);
  }
  return Graph::from_rows(std::span(rows).first(n));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng + nh > kMaxVertices) throw GraphError("disjoint union exceeds 64 vertices");
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < ng; ++v) rows[v] = g.row_unchecked(v);
  for (int v = 0; v < nh; ++v) rows[ng + v] = h.row_unchecked(v) << ng;
  return Graph::from_rows(std::span(rows).first(ng + nh));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) { return complement(Graph(n)); }

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw GraphError("negative part size");
  check_order(static_cast<long long>(a) + b);
  return complement(disjoint_union(complete(a), complete(b)));
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph extremal_cliques(int a, int max_degree, int b) {
  if (a < 0 || max_degree < 0 || b < 0) throw GraphError("negative construction parameter");
  check_order(static_cast<long long>(a) * (max_degree + 1) + b);
  Graph g;
  for (int i = 0; i < a; ++i) g = disjoint_union(g, complete(max_degree + 1));
  return disjoint_union(g, complete(b));
}

Graph construct(std::string_view kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw GraphError(std::string(kind) + " expects " + std::to_string(count) + " parameters");
    }
  };
  if (kind == "empty") {
    need(1);
    return empty_graph(params[0]);
  }
  if (kind == "complete") {
    need(1);
    return complete(params[0]);
  }
  if (kind == "complete_bipartite") {
    need(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (kind == "cycle") {
    need(1);
    return cycle(params[0]);
  }
  if (kind == "path") {
    need(1);
    return path(params[0]);
  }
  if (kind == "extremal_cliques") {
    need(3);
    return extremal_cliques(params[0], params[1], params[2]);
  }
  throw GraphError("unknown construction: " + std::string(kind));
}

int degree(const Graph& g, int v) { return std::popcount(g.row(v)); }

std::optional<int> min_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, std::popcount(g.row_unchecked(v)));
  return best;
}

std::optional<int> max_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, std::popcount(g.row_unchecked(v)));
  return best;
}

VertexSet neighborhood(const Graph& g, int v) { return VertexSet(g.row(v)); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.without(g.vertices()).bits() != 0) throw GraphError("vertex set exceeds graph");
  std::array<std::uint64_t, kMaxVertices> rows{};
  int k = 0;
  for (int v : s) rows[k++] = compress_bits(g.row_unchecked(v), s.bits());
  return Graph::from_rows(std::span(rows).first(k));
}

Graph delete_vertex(const Graph& g, int v) {
  VertexSet s = g.vertices();
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  s.erase(v);
  return induced_subgraph(g, s);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw GraphError("not a permutation");
    seen[p] = true;
  }
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    for (int w : VertexSet(g.row_unchecked(v))) rows[perm[v]] |= std::uint64_t{1} << perm[w];
  }
  return Graph::from_rows(std::span(rows).first(n));
}

}  // namespace cliquemax
