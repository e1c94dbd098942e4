#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cliquemax {

inline constexpr int kMaxVertices = 64;

/// Raised for malformed graphs, out-of-range vertices and size overflow.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertices of some ambient graph, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 (n <= 64) stored as adjacency
/// bit rows. Rows at positions >= n are always zero, so equality is
/// bit-identity of labeled graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds from adjacency rows; throws GraphError unless the rows describe a
  /// loopless symmetric graph with no bits beyond n.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  std::uint64_t row(int v) const { return adj_[check(v)]; }
  /// Unchecked row access for hot loops.
  std::uint64_t row_unchecked(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return v;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
/// a copies of K_{max_degree+1} followed by one K_b.
Graph extremal_cliques(int a, int max_degree, int b);

/// Named constructions by string, used by the command line:
/// "empty n", "complete n", "complete_bipartite a b", "cycle n", "path n",
/// "extremal_cliques a delta b".
Graph construct(std::string_view kind, std::span<const int> params);

int degree(const Graph& g, int v);
/// nullopt for the graph on zero vertices.
std::optional<int> min_degree(const Graph& g);
std::optional<int> max_degree(const Graph& g);

VertexSet neighborhood(const Graph& g, int v);
/// Retained vertices are relabeled 0..|S|-1 in increasing original order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);

/// Relabels so that vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace cliquemax
