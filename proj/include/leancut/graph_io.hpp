#pragma once

/**
 * Text format for multigraphs:
 *
 *   # optional comment lines
 *   p <n> <m>
 *   e <u> <v>        (m lines, vertices 1-based; the i-th line is edge id i-1)
 *
 * Vertices are written 1..n and stored 0..n-1.
 */

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "leancut/errors.hpp"
#include "leancut/multigraph.hpp"

namespace leancut {

inline MultiGraph read_graph(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> endpoints;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& why) {
      throw parse_error("graph line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      if (n >= 0) fail("duplicate p line");
      if (!(ls >> n >> m) || n < 0 || m < 0) fail("expected 'p <n> <m>'");
    } else if (tag == "e") {
      if (n < 0) fail("e line before p line");
      long long u, v;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range");
      if (u == v) fail("loop edge");
      endpoints.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest && !rest.empty() && rest[0] != '#') fail("trailing tokens");
  }
  if (n < 0) throw parse_error("graph: missing p line");
  if (static_cast<long long>(endpoints.size()) != m)
    throw parse_error("graph: expected " + std::to_string(m) + " edges, got " +
                      std::to_string(endpoints.size()));
  std::vector<int> vertices(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vertices[i] = i;
  return MultiGraph::create(std::move(vertices), endpoints);
}

/** Writes the format above; requires a graph with vertices exactly 0..n-1. */
inline void write_graph(std::ostream& out, const MultiGraph& g) {
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    if (g.vertices()[i] != i)
      throw input_error("write_graph: vertex ids must be dense 0..n-1");
  out << "p " << n << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges()) out << "e " << (e.u + 1) << " " << (e.v + 1) << "\n";
}

}  // namespace leancut
