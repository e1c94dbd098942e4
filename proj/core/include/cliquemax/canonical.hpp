#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "cliquemax/graph.hpp"

namespace cliquemax {

inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism certificate: the graph6 encoding of the canonically relabeled
/// graph. Equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string certificate;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  /// g relabeled so that vertex v becomes position[v].
  Graph canonical;
  std::array<std::uint8_t, kMaxCanonicalOrder> position{};
  /// Smallest vertex in the Aut(g)-orbit of each vertex.
  std::array<std::uint8_t, kMaxCanonicalOrder> orbit{};
  /// Number of automorphism generators found during the search.
  int generators = 0;
};

/// Canonical labeling by equitable partition refinement and a backtracking
/// search over individualizations, keeping the lexicographically greatest
/// relabeled adjacency matrix. Branches are pruned with the automorphisms
/// discovered along the way. Throws GraphError for more than 16 vertices.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace cliquemax
