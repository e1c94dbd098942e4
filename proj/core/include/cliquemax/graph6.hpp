#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemax/graph.hpp"

namespace cliquemax {

class Graph6Error : public GraphError {
 public:
  using GraphError::GraphError;
};

inline constexpr int kMaxGraph6Order = 62;

/// Standard graph6 with the one-byte size header: char(63 + n), then the
/// upper triangle read column by column (x01, x02, x12, x03, ...), packed six
/// bits per byte, most significant first, each byte offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

/// Newline-delimited graph6. Blank lines are skipped; a ">>graph6<<" header
/// on the first line is accepted.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace cliquemax
