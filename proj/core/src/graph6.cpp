#include "cliquemax/graph6.hpp"

#include <istream>
#include <ostream>

namespace cliquemax {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw Graph6Error("graph6 short header supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row_unchecked(j) >> i) & 1U);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  const int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 63 + kMaxGraph6Order) {
    throw Graph6Error("unsupported graph6 size byte");
  }
  const int n = header - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) throw Graph6Error("graph6 length does not match vertex count");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw Graph6Error("graph6 byte out of range");
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last < 0 || last > 63) throw Graph6Error("graph6 byte out of range");
    const std::size_t pad = bytes * 6 - bits;
    if (last & ((1 << pad) - 1)) throw Graph6Error("nonzero graph6 padding");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(graph6_decode(line));
  }
  return graphs;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace cliquemax
