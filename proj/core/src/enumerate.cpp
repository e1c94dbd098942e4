#include "cliquemax/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cliquemax/canonical.hpp"
#include "cliquemax/graph6.hpp"

namespace cliquemax {

namespace {

// Parameters of the space the generator actually walks: graphs with maximum
// degree at most max_degree (complements, for min_at_least configs).
struct WorkingSpace {
  int n = 0;
  int max_degree = 0;
  std::optional<int> edges;
};

WorkingSpace working_space(const EnumerationConfig& config) {
  WorkingSpace space;
  space.n = config.n;
  const int pairs = config.n * (config.n - 1) / 2;
  if (config.degree_mode == DegreeMode::max_at_most) {
    space.max_degree = config.degree_bound;
    space.edges = config.edge_count;
  } else {
    space.max_degree = config.n - 1 - config.degree_bound;
    if (config.edge_count) space.edges = pairs - *config.edge_count;
  }
  return space;
}

// Most edges that vertices k..n-1 can still bring in.
int max_future_edges(int k, const WorkingSpace& space) {
  int total = 0;
  for (int j = k; j < space.n; ++j) total += std::min(space.max_degree, j);
  return total;
}

bool admissible(const Graph& g, const WorkingSpace& space) {
  if (g.order() > space.n) return false;
  if (g.order() > 0 && *max_degree(g) > space.max_degree) return false;
  if (space.edges) {
    const int e = g.edge_count();
    if (e > *space.edges || e + max_future_edges(g.order(), space) < *space.edges) return false;
  }
  return true;
}

// Canonical children of `parent` on one more vertex, ordered by certificate.
std::vector<Graph> children(const Graph& parent, const WorkingSpace& space) {
  const int k = parent.order();
  const std::uint64_t new_bit = std::uint64_t{1} << k;
  std::array<std::uint64_t, kMaxVertices> rows{};
  std::array<int, kMaxVertices> deg{};
  std::uint64_t avail = 0;
  for (int v = 0; v < k; ++v) {
    rows[v] = parent.row_unchecked(v);
    deg[v] = std::popcount(rows[v]);
    if (deg[v] < space.max_degree) avail |= std::uint64_t{1} << v;
  }
  const int parent_edges = parent.edge_count();
  const int future = max_future_edges(k + 1, space);

  std::map<std::string, Graph> accepted;
  for (std::uint64_t s = avail;; s = (s - 1) & avail) {
    const int new_deg = std::popcount(s);
    bool viable = new_deg <= space.max_degree;
    if (viable && space.edges) {
      const int e = parent_edges + new_deg;
      viable = e <= *space.edges && e + future >= *space.edges;
    }
    if (viable) {
      // Cheap invariant filter before the canonical labeling: the new vertex
      // must have minimum degree and, among those, maximum neighbour-degree sum.
      std::array<int, kMaxVertices> d = deg;
      for (std::uint64_t r = s; r != 0; r &= r - 1) ++d[std::countr_zero(r)];
      d[k] = new_deg;
      int min_deg = new_deg;
      for (int v = 0; v < k; ++v) min_deg = std::min(min_deg, d[v]);
      if (new_deg == min_deg) {
        auto nbr_sum = [&](std::uint64_t row) {
          int sum = 0;
          for (; row != 0; row &= row - 1) sum += d[std::countr_zero(row)];
          return sum;
        };
        const int new_sum = nbr_sum(s);
        std::uint64_t tied = new_bit;
        for (int v = 0; v < k && viable; ++v) {
          if (d[v] != min_deg) continue;
          const std::uint64_t row = rows[v] | (((s >> v) & 1U) ? new_bit : 0);
          const int sum = nbr_sum(row);
          if (sum > new_sum) viable = false;
          else if (sum == new_sum) tied |= std::uint64_t{1} << v;
        }
        if (viable) {
          std::array<std::uint64_t, kMaxVertices> child_rows = rows;
          child_rows[k] = s;
          for (std::uint64_t r = s; r != 0; r &= r - 1) child_rows[std::countr_zero(r)] |= new_bit;
          const Graph child = Graph::from_rows(std::span(child_rows).first(k + 1));
          const CanonicalLabeling lab = canonical_labeling(child);
          int deletion = k;
          for (std::uint64_t r = tied; r != 0; r &= r - 1) {
            const int v = std::countr_zero(r);
            if (lab.position[v] > lab.position[deletion]) deletion = v;
          }
          if (lab.orbit[k] == lab.orbit[deletion]) {
            accepted.emplace(graph6_encode(lab.canonical), lab.canonical);
          }
        }
      }
    }
    if (s == 0) break;
  }
  std::vector<Graph> out;
  out.reserve(accepted.size());
  for (auto& [cert, g] : accepted) out.push_back(std::move(g));
  return out;
}

void emit(const Graph& g, const EnumerationConfig& config, const WorkingSpace& space,
          const GraphSink& sink) {
  if (space.edges && g.edge_count() != *space.edges) return;
  const Graph out = config.degree_mode == DegreeMode::min_at_least ? complement(g) : g;
  if (config.connected_only && !is_connected(out)) return;
  sink(out);
}

void extend(const Graph& g, const EnumerationConfig& config, const WorkingSpace& space,
            const GraphSink& sink) {
  if (g.order() == space.n) {
    emit(g, config, space, sink);
    return;
  }
  for (const Graph& child : children(g, space)) extend(child, config, space, sink);
}

void collect_level(const Graph& g, const WorkingSpace& space, int depth, std::vector<Graph>& out) {
  if (g.order() == depth) {
    out.push_back(g);
    return;
  }
  for (const Graph& child : children(g, space)) collect_level(child, space, depth, out);
}

}  // namespace

EnumerationConfig EnumerationConfig::all_graphs(int n) { return max_degree(n, n > 0 ? n - 1 : 0); }

EnumerationConfig EnumerationConfig::max_degree(int n, int bound) {
  EnumerationConfig c;
  c.n = n;
  c.degree_mode = DegreeMode::max_at_most;
  c.degree_bound = bound;
  return c;
}

EnumerationConfig EnumerationConfig::min_degree(int n, int bound) {
  EnumerationConfig c;
  c.n = n;
  c.degree_mode = DegreeMode::min_at_least;
  c.degree_bound = bound;
  return c;
}

void EnumerationConfig::validate() const {
  if (n < 1 || n > kMaxCanonicalOrder) throw std::invalid_argument("enumeration needs 1 <= n <= 16");
  if (degree_bound < 0 || degree_bound >= n) throw std::invalid_argument("degree bound must lie in [0, n)");
  if (edge_count && (*edge_count < 0 || *edge_count > n * (n - 1) / 2)) {
    throw std::invalid_argument("edge count out of range");
  }
}

std::string EnumerationConfig::describe() const {
  std::ostringstream out;
  out << "n=" << n << ';' << (degree_mode == DegreeMode::max_at_most ? "max_at_most=" : "min_at_least=")
      << degree_bound << ";edges=";
  if (edge_count) out << *edge_count;
  else out << '*';
  out << ";connected=" << (connected_only ? 1 : 0);
  return out.str();
}

void enumerate_graphs(const EnumerationConfig& config, const GraphSink& sink) {
  run_task(EnumerationTask{Graph(0), config}, sink);
}

std::vector<Graph> collect_graphs(const EnumerationConfig& config) {
  std::vector<Graph> out;
  enumerate_graphs(config, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_graphs(const EnumerationConfig& config) {
  std::uint64_t count = 0;
  enumerate_graphs(config, [&](const Graph&) { ++count; });
  return count;
}

std::vector<EnumerationTask> split_tasks(const EnumerationConfig& config, int depth) {
  config.validate();
  if (depth < 0 || depth >= config.n) throw std::invalid_argument("split depth must lie in [0, n)");
  const WorkingSpace space = working_space(config);
  std::vector<Graph> prefixes;
  collect_level(Graph(0), space, depth, prefixes);
  std::vector<EnumerationTask> tasks;
  tasks.reserve(prefixes.size());
  for (Graph& p : prefixes) {
    if (admissible(p, space)) tasks.push_back(EnumerationTask{std::move(p), config});
  }
  return tasks;
}

void run_task(const EnumerationTask& task, const GraphSink& sink) {
  task.config.validate();
  const WorkingSpace space = working_space(task.config);
  if (!admissible(task.prefix, space)) return;
  extend(task.prefix, task.config, space, sink);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= g.row_unchecked(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices().bits();
}

}  // namespace cliquemax
