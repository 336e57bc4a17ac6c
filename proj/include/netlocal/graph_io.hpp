#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netlocal/graph.hpp"

namespace netlocal {

// Text format: first line "n edge_count", then one "u v" line per edge
// (1-based). Loops are written "v v"; parallel edges repeat. Writing is
// canonical (edges sorted lexicographically), so write(parse(x)) == x for
// canonical files.
inline void write_graph(const Graph& g, std::ostream& os) {
  os << g.node_count() << ' ' << g.edge_count() << '\n';
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    for (NodeId w : g.adjacency(u)) {
      if (w >= u) os << u << ' ' << w << '\n';
    }
  }
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(g, os);
  return os.str();
}

inline Graph parse_graph(std::istream& is) {
  int n = 0;
  long long m = 0;
  if (!(is >> n >> m)) throw GraphError("graph parse: bad header");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    NodeId u = 0, v = 0;
    if (!(is >> u >> v)) throw GraphError("graph parse: truncated edge list");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw GraphError("cannot open for write: " + path);
  write_graph(g, os);
  if (!os) throw GraphError("write failed: " + path);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw GraphError("cannot open for read: " + path);
  return parse_graph(is);
}

}  // namespace netlocal
