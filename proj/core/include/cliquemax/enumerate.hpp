#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliquemax/graph.hpp"

namespace cliquemax {

enum class DegreeMode { max_at_most, min_at_least };

struct EnumerationConfig {
  int n = 0;
  DegreeMode degree_mode = DegreeMode::max_at_most;
  /// Maximum degree (max_at_most) or minimum degree (min_at_least).
  int degree_bound = 0;
  std::optional<int> edge_count;
  bool connected_only = false;

  static EnumerationConfig all_graphs(int n);
  static EnumerationConfig max_degree(int n, int bound);
  static EnumerationConfig min_degree(int n, int bound);

  /// Throws std::invalid_argument unless 1 <= n <= 16 and 0 <= bound < n.
  void validate() const;
  /// Stable textual description; the basis of config hashes.
  std::string describe() const;

  bool operator==(const EnumerationConfig&) const = default;
};

/// A subtree of the generation tree: every class whose generation path passes
/// through `prefix`. The prefix lives in the generator's working space, which
/// for min_at_least is the complement.
struct EnumerationTask {
  Graph prefix;
  EnumerationConfig config;
};

using GraphSink = std::function<void(const Graph&)>;

/// Emits one canonically labeled representative per isomorphism class
/// satisfying the config, in a deterministic order.
///
/// Generation is by canonical augmentation: a graph on k+1 vertices is
/// accepted from its parent only if the added vertex lies in the automorphism
/// orbit of the canonical deletion vertex (minimum degree, then largest
/// neighbour-degree sum, then largest canonical position). Accepted siblings
/// are deduplicated and ordered by certificate. Minimum-degree classes are
/// generated as maximum-degree classes of the complement.
void enumerate_graphs(const EnumerationConfig& config, const GraphSink& sink);
std::vector<Graph> collect_graphs(const EnumerationConfig& config);
std::uint64_t count_graphs(const EnumerationConfig& config);

/// Tasks for every generation-tree node on `depth` vertices, in stream order.
/// Requires 0 <= depth < n. The concatenation of run_task over the result
/// equals enumerate_graphs.
std::vector<EnumerationTask> split_tasks(const EnumerationConfig& config, int depth);
/// A prefix violating the degree or edge constraints yields nothing.
void run_task(const EnumerationTask& task, const GraphSink& sink);

bool is_connected(const Graph& g);

}  // namespace cliquemax
