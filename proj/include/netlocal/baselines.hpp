#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlocal/graph.hpp"

namespace netlocal {

class SolverCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactSolution {
  VertexSet optimum_set;
  double optimum_value = 0.0;
  std::string method = "exhaustive";
  long long explored = 0;  // subsets examined
};

namespace detail {

// closed neighborhood of node v as a bitmask over 0-based positions
inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.node_count());
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    std::uint32_t m = 1u << (v - 1);
    g.for_each_distinct_neighbor(v, [&](NodeId w) { m |= 1u << (w - 1); });
    masks[v - 1] = m;
  }
  return masks;
}

inline VertexSet to_vertex_set(std::uint32_t mask) {
  VertexSet s;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) s.insert(i + 1);
  return s;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order, calling
// visit(mask); stops early when visit returns true.
template <typename Visit>
bool for_each_subset_of_size(int n, int k, Visit&& visit) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : pick) mask |= 1u << i;
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

// Smallest dominating set by size-ordered exhaustive search. The first
// feasible size wins; within a size the lexicographically first subset wins,
// so results are deterministic.
inline ExactSolution brute_force_mds(const Graph& g, int cap = 24) {
  const int n = g.node_count();
  if (n > cap)
    throw SolverCapExceeded("brute_force_mds: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  const auto masks = detail::closed_masks(g);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  ExactSolution sol;
  for (int k = 0; k <= n; ++k) {
    std::uint32_t found = 0;
    const bool ok = detail::for_each_subset_of_size(n, k, [&](std::uint32_t subset) {
      ++sol.explored;
      std::uint32_t dom = 0;
      std::uint32_t rest = subset;
      while (rest) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        dom |= masks[i];
      }
      if (dom == full) {
        found = subset;
        return true;
      }
      return false;
    });
    if (ok || k == 0) {
      if (ok) {
        sol.optimum_set = detail::to_vertex_set(found);
        sol.optimum_value = k;
        return sol;
      }
      if (full == 0) {  // empty graph: empty set dominates
        sol.optimum_value = 0;
        return sol;
      }
    }
  }
  throw GraphError("brute_force_mds: unreachable");
}

// Smallest S with |D(S)| >= target_count.
inline ExactSolution brute_force_partial_cover(const Graph& g, int target_count, int cap = 20) {
  const int n = g.node_count();
  if (n > cap)
    throw SolverCapExceeded("brute_force_partial_cover: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  if (target_count > n)
    throw GraphError("brute_force_partial_cover: target exceeds node count");
  const auto masks = detail::closed_masks(g);
  ExactSolution sol;
  for (int k = 0; k <= n; ++k) {
    std::uint32_t found = 0;
    bool ok = false;
    detail::for_each_subset_of_size(n, k, [&](std::uint32_t subset) {
      ++sol.explored;
      std::uint32_t dom = 0;
      std::uint32_t rest = subset;
      while (rest) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        dom |= masks[i];
      }
      if (std::popcount(dom) >= target_count) {
        found = subset;
        ok = true;
        return true;
      }
      return false;
    });
    if (ok || (k == 0 && target_count <= 0)) {
      sol.optimum_set = detail::to_vertex_set(found);
      sol.optimum_value = k;
      return sol;
    }
  }
  throw GraphError("brute_force_partial_cover: unreachable");
}

// Minimizes f(S) = c|S| + |V \ D(S)| over all subsets. Size-ordered with the
// prune f >= c|S|: once c*k beats the best f seen, larger sizes cannot win.
inline ExactSolution brute_force_neighbor_collect(const Graph& g, double c, int cap = 18) {
  const int n = g.node_count();
  if (n > cap)
    throw SolverCapExceeded("brute_force_neighbor_collect: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  const auto masks = detail::closed_masks(g);
  ExactSolution sol;
  double best = static_cast<double>(n);  // f(empty) = n
  std::uint32_t best_mask = 0;
  sol.explored = 1;
  for (int k = 1; k <= n; ++k) {
    if (c * k >= best) break;
    detail::for_each_subset_of_size(n, k, [&](std::uint32_t subset) {
      ++sol.explored;
      std::uint32_t dom = 0;
      std::uint32_t rest = subset;
      while (rest) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        dom |= masks[i];
      }
      const double f = c * k + (n - std::popcount(dom));
      if (f < best) {
        best = f;
        best_mask = subset;
      }
      return false;
    });
  }
  sol.optimum_set = detail::to_vertex_set(best_mask);
  sol.optimum_value = best;
  return sol;
}

// Classic full-information greedy: repeatedly add the node covering the most
// new nodes (smallest index on ties) until everything is dominated.
inline VertexSet full_info_greedy_mds(const Graph& g) {
  const int n = g.node_count();
  std::vector<char> dominated(n + 1, 0);
  int covered = 0;
  VertexSet s;
  while (covered < n) {
    NodeId best = 0;
    int best_gain = -1;
    for (NodeId v = 1; v <= n; ++v) {
      if (s.contains(v)) continue;
      int gain = dominated[v] ? 0 : 1;
      g.for_each_distinct_neighbor(v, [&](NodeId w) {
        if (!dominated[w]) ++gain;
      });
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    s.insert(best);
    if (!dominated[best]) {
      dominated[best] = 1;
      ++covered;
    }
    g.for_each_distinct_neighbor(best, [&](NodeId w) {
      if (!dominated[w]) {
        dominated[w] = 1;
        ++covered;
      }
    });
  }
  return s;
}

// Shortest path by BFS, or nullopt when s and t are disconnected.
inline std::optional<std::vector<NodeId>> bfs_shortest_path(const Graph& g, NodeId s, NodeId t) {
  g.check_node(s);
  g.check_node(t);
  if (s == t) return std::vector<NodeId>{s};
  std::vector<NodeId> parent(g.node_count() + 1, 0);
  std::vector<char> seen(g.node_count() + 1, 0);
  std::vector<NodeId> queue{s};
  seen[s] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    bool done = false;
    g.for_each_distinct_neighbor(u, [&](NodeId w) {
      if (seen[w] || done) return;
      seen[w] = 1;
      parent[w] = u;
      if (w == t) done = true;
      queue.push_back(w);
    });
    if (done) break;
  }
  if (!seen[t]) return std::nullopt;
  std::vector<NodeId> path;
  for (NodeId v = t; v != 0; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Re-export for harness symmetry with the local algorithms.
inline std::pair<NodeId, int> exact_max_degree(const Graph& g) { return max_degree(g); }

}  // namespace netlocal
