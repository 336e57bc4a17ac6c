#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace netlocal {

// Nodes are identified by their 1-based creation index.
using NodeId = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable undirected multigraph. Self-loops are stored once in the owner's
// adjacency list and contribute 2 to the degree; parallel edges are kept.
class Graph {
 public:
  Graph(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edges)
      : n_(node_count),
        edge_count_(static_cast<long long>(edges.size())),
        adj_(node_count + 1),
        loops_(node_count + 1, 0),
        degree_(node_count + 1, 0) {
    if (node_count < 0) throw GraphError("negative node count");
    for (const auto& [u, v] : edges) {
      check_node(u);
      check_node(v);
      if (u == v) {
        adj_[u].push_back(u);
        ++loops_[u];
      } else {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
      }
    }
    for (NodeId v = 1; v <= n_; ++v) {
      std::sort(adj_[v].begin(), adj_[v].end());
      degree_[v] = static_cast<int>(adj_[v].size()) + loops_[v];
    }
  }

  int node_count() const { return n_; }
  long long edge_count() const { return edge_count_; }

  bool valid(NodeId v) const { return v >= 1 && v <= n_; }

  void check_node(NodeId v) const {
    if (!valid(v)) throw GraphError("invalid node index " + std::to_string(v));
  }

  // Multigraph degree; a loop counts 2.
  int degree(NodeId v) const {
    check_node(v);
    return degree_[v];
  }

  int loop_count(NodeId v) const {
    check_node(v);
    return loops_[v];
  }

  long long total_loops() const {
    long long s = 0;
    for (NodeId v = 1; v <= n_; ++v) s += loops_[v];
    return s;
  }

  // Sorted neighbor list with multiplicities; a loop appears once as v itself.
  const std::vector<NodeId>& adjacency(NodeId v) const {
    check_node(v);
    return adj_[v];
  }

  // Deduplicated neighbors excluding v itself.
  template <typename F>
  void for_each_distinct_neighbor(NodeId v, F&& f) const {
    check_node(v);
    NodeId prev = 0;
    for (NodeId w : adj_[v]) {
      if (w == v || w == prev) continue;
      prev = w;
      f(w);
    }
  }

  std::vector<NodeId> distinct_neighbors(NodeId v) const {
    std::vector<NodeId> out;
    for_each_distinct_neighbor(v, [&](NodeId w) { out.push_back(w); });
    return out;
  }

  int distinct_degree(NodeId v) const {
    int c = 0;
    for_each_distinct_neighbor(v, [&](NodeId) { ++c; });
    return c;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edge_count_ == other.edge_count_ && adj_ == other.adj_ &&
           loops_ == other.loops_;
  }

 private:
  int n_;
  long long edge_count_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<int> loops_;
  std::vector<int> degree_;
};

// Duplicate-free node set that remembers insertion order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<NodeId> xs) {
    for (NodeId v : xs) insert(v);
  }

  // Returns false if v was already present.
  bool insert(NodeId v) {
    if (members_.count(v)) return false;
    members_.insert(v);
    order_.push_back(v);
    return true;
  }

  bool contains(NodeId v) const { return members_.count(v) > 0; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  const std::vector<NodeId>& insertion_order() const { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  std::vector<NodeId> sorted() const {
    std::vector<NodeId> out = order_;
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const VertexSet& other) const { return sorted() == other.sorted(); }

 private:
  std::vector<NodeId> order_;
  std::unordered_set<NodeId> members_;
};

enum class ViewMode { open, closed };

inline const char* to_string(ViewMode m) { return m == ViewMode::open ? "open" : "closed"; }

// What a local algorithm sees around its queried set: every node within
// distance r (with its full multigraph degree), the edges among them per the
// mode rule, and the frontier of nodes at distance exactly r. Open mode hides
// edges whose endpoints are both on the frontier.
struct LocalView {
  std::map<NodeId, int> degrees;               // visible node -> multigraph degree
  std::set<std::pair<NodeId, NodeId>> edges;   // normalized (min,max), deduplicated
  std::set<NodeId> frontier;                   // nodes at distance exactly r
  ViewMode mode = ViewMode::open;

  bool contains(NodeId v) const { return degrees.count(v) > 0; }
  bool has_edge(NodeId u, NodeId v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
  }
  std::size_t node_count() const { return degrees.size(); }

  bool operator==(const LocalView& other) const {
    return degrees == other.degrees && edges == other.edges && frontier == other.frontier &&
           mode == other.mode;
  }
};

// D(S) = N(S) ∪ S. Self-loops add no new members.
inline VertexSet dominated_set(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (NodeId v : s) {
    g.check_node(v);
    out.insert(v);
  }
  for (NodeId v : s) {
    g.for_each_distinct_neighbor(v, [&](NodeId w) { out.insert(w); });
  }
  return out;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  return dominated_set(g, s).size() == static_cast<std::size_t>(g.node_count());
}

// Multi-source distances from s, capped at radius r (unreached = -1).
inline std::vector<int> distances_within(const Graph& g, const VertexSet& s, int r) {
  std::vector<int> dist(g.node_count() + 1, -1);
  std::queue<NodeId> q;
  for (NodeId v : s) {
    g.check_node(v);
    if (dist[v] != 0) {
      dist[v] = 0;
      q.push(v);
    }
  }
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    if (dist[u] == r) continue;
    g.for_each_distinct_neighbor(u, [&](NodeId w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    });
  }
  return dist;
}

inline LocalView neighborhood_view(const Graph& g, const VertexSet& s, int r, ViewMode mode) {
  if (s.empty()) throw GraphError("neighborhood_view: source set must be non-empty");
  if (r < 1) throw GraphError("neighborhood_view: radius must be >= 1");
  LocalView view;
  view.mode = mode;
  const std::vector<int> dist = distances_within(g, s, r);
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (dist[v] < 0) continue;
    view.degrees[v] = g.degree(v);
    if (dist[v] == r) view.frontier.insert(v);
  }
  for (const auto& [v, deg] : view.degrees) {
    for (NodeId w : g.adjacency(v)) {
      if (w < v) continue;  // each undirected pair handled once; loops have w == v
      if (dist[w] < 0) continue;
      if (mode == ViewMode::open && dist[v] == r && dist[w] == r) continue;
      view.edges.insert({v, w});
    }
  }
  return view;
}

// Node of maximum multigraph degree; smallest index wins ties.
inline std::pair<NodeId, int> max_degree(const Graph& g) {
  if (g.node_count() < 1) throw GraphError("max_degree: empty graph");
  NodeId best = 1;
  int best_deg = g.degree(1);
  for (NodeId v = 2; v <= g.node_count(); ++v) {
    if (g.degree(v) > best_deg) {
      best = v;
      best_deg = g.degree(v);
    }
  }
  return {best, best_deg};
}

// H(d) = sum_{k=1..d} 1/k, H(0) = 0.
inline double harmonic_number(long long d) {
  if (d < 0) throw GraphError("harmonic_number: negative argument");
  double h = 0.0;
  for (long long k = 1; k <= d; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

}  // namespace netlocal
