#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netlocal/graph.hpp"
#include "netlocal/rng.hpp"

namespace netlocal {

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lower-bound construction together with the optimum it plants. Nodes are
// placed under a random label permutation so that creation order carries no
// information.
struct FamilyInstance {
  std::string family;
  Graph graph{0, {}};
  VertexSet planted_opt;
  // For the neighbor-collecting families, the planted objective value is
  // c * |planted_opt| + planted_uncovered once a cost c is supplied.
  long long planted_uncovered = 0;
  std::map<std::string, NodeId> special_nodes;
  std::map<std::string, long long> params;  // requested_n, actual n, r, k, ...

  double planted_value(double c) const {
    return c * static_cast<double>(planted_opt.size()) +
           static_cast<double>(planted_uncovered);
  }

  nlohmann::json sidecar() const {
    nlohmann::json j;
    j["family"] = family;
    j["params"] = params;
    nlohmann::json sp;
    for (const auto& [k, v] : special_nodes) sp[k] = v;
    j["special_nodes"] = sp;
    j["planted_opt"] = planted_opt.sorted();
    j["planted_uncovered"] = planted_uncovered;
    return j;
  }
};

namespace detail {

// Assigns structural slots 1..n to uniformly random node labels.
class Placement {
 public:
  Placement(int n, Rng& rng) : label_(n + 1) {
    for (int i = 0; i <= n; ++i) label_[i] = i;
    for (int i = n; i >= 2; --i) {
      std::swap(label_[i], label_[rng.uniform_int(1, i)]);
    }
  }
  NodeId operator[](int slot) const { return label_[slot]; }

 private:
  std::vector<NodeId> label_;
};

inline long long isqrt_floor(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while ((r + 1) * (r + 1) <= n) ++r;
  while (r * r > n) --r;
  return r;
}

}  // namespace detail

// Parallel s-t paths, all but one broken in the middle. For k >= 2 each path
// becomes a chain of k-cliques joined by complete bipartite links, so the
// graph is k-edge-connected along the surviving path; the break removes the
// middle bipartite join. Requested n is rounded down to the nearest feasible
// size.
inline FamilyInstance broken_paths(int n, int r, int k, std::uint64_t seed) {
  if (r < 1 || k < 1) throw FamilyError("broken_paths: need r >= 1 and k >= 1");
  const int block_len = 2 * r + 4;          // blocks per path
  const long long path_nodes = static_cast<long long>(k) * block_len;
  const long long path_count = (static_cast<long long>(n) - 2) / path_nodes;
  if (path_count < 1) throw FamilyError("broken_paths: n too small for one path");
  const int actual_n = static_cast<int>(2 + path_count * path_nodes);

  Rng rng(seed);
  detail::Placement place(actual_n, rng);
  const long long unbroken = rng.uniform_int(0, path_count - 1);

  const NodeId s = place[1];
  const NodeId t = place[2];
  std::vector<std::pair<NodeId, NodeId>> edges;
  FamilyInstance inst;
  inst.family = "broken_paths";

  auto slot_of = [&](long long path, int block, int j) {
    // j in [0, k) within block; blocks are 0-based along the path
    return static_cast<int>(3 + path * path_nodes + static_cast<long long>(block) * k + j);
  };

  for (long long p = 0; p < path_count; ++p) {
    const bool broken = p != unbroken;
    for (int b = 0; b < block_len; ++b) {
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          edges.emplace_back(place[slot_of(p, b, i)], place[slot_of(p, b, j)]);
        }
      }
    }
    for (int b = 0; b + 1 < block_len; ++b) {
      // middle join sits between blocks r+1 and r+2 (0-based)
      if (broken && b == r + 1) continue;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          edges.emplace_back(place[slot_of(p, b, i)], place[slot_of(p, b + 1, j)]);
        }
      }
    }
    for (int i = 0; i < k; ++i) {
      edges.emplace_back(s, place[slot_of(p, 0, i)]);
      edges.emplace_back(t, place[slot_of(p, block_len - 1, i)]);
    }
    if (!broken) {
      for (int b = 0; b < block_len; ++b)
        for (int i = 0; i < k; ++i) inst.planted_opt.insert(place[slot_of(p, b, i)]);
    }
  }
  inst.planted_opt.insert(s);
  inst.planted_opt.insert(t);

  inst.graph = Graph(actual_n, edges);
  inst.special_nodes = {{"s", s}, {"t", t}};
  inst.params = {{"requested_n", n}, {"n", actual_n}, {"r", r}, {"k", k},
                 {"path_count", path_count}};
  return inst;
}

// Complete binary tree with one leaf promoted to a hub of floor(sqrt(n))
// spokes; the hub is the only node of degree above 3 and is the gain-per-cost
// optimum.
inline FamilyInstance tree_hub(int n, std::uint64_t seed) {
  const long long spokes = detail::isqrt_floor(n);
  const int tree_n = static_cast<int>(n - spokes);
  if (tree_n < 2) throw FamilyError("tree_hub: n too small");

  Rng rng(seed);
  detail::Placement place(n, rng);

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<int> leaves;
  for (int i = 2; i <= tree_n; ++i) edges.emplace_back(place[i], place[i / 2]);
  for (int i = 1; i <= tree_n; ++i) {
    if (2 * i > tree_n) leaves.push_back(i);
  }
  const int hub_slot = leaves[rng.index(leaves.size())];
  const NodeId hub = place[hub_slot];
  for (long long j = 0; j < spokes; ++j)
    edges.emplace_back(hub, place[static_cast<int>(tree_n + 1 + j)]);

  FamilyInstance inst;
  inst.family = "tree_hub";
  inst.graph = Graph(n, edges);
  inst.planted_opt.insert(hub);
  inst.special_nodes = {{"s", hub}};
  inst.params = {{"requested_n", n}, {"n", n}, {"spokes", spokes}, {"tree_n", tree_n}};
  if (inst.graph.degree(hub) != static_cast<int>(spokes) + 1)
    throw FamilyError("tree_hub: hub degree mismatch");
  return inst;
}

// Clique minus one random edge (u,v), with pendants hung on u and v. The
// planted dominating set is {u, v}; every clique node keeps the same degree,
// so u and v are invisible to degree-only strategies.
inline FamilyInstance clique_pendant(int n, std::uint64_t seed) {
  if (n < 5) throw FamilyError("clique_pendant: need n >= 5");
  Rng rng(seed);
  detail::Placement place(n, rng);
  const int cn = n - 2;  // clique slots 1..cn; pendants at cn+1, cn+2

  // remove a uniformly random clique edge
  const int u_slot = static_cast<int>(rng.uniform_int(1, cn));
  int v_slot = static_cast<int>(rng.uniform_int(1, cn - 1));
  if (v_slot >= u_slot) ++v_slot;

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 1; i <= cn; ++i) {
    for (int j = i + 1; j <= cn; ++j) {
      if ((i == u_slot && j == v_slot) || (i == v_slot && j == u_slot)) continue;
      edges.emplace_back(place[i], place[j]);
    }
  }
  const NodeId u = place[u_slot], v = place[v_slot];
  const NodeId up = place[cn + 1], vp = place[cn + 2];
  edges.emplace_back(u, up);
  edges.emplace_back(v, vp);

  FamilyInstance inst;
  inst.family = "clique_pendant";
  inst.graph = Graph(n, edges);
  inst.planted_opt = {u, v};
  inst.special_nodes = {{"u", u}, {"v", v}, {"u_pendant", up}, {"v_pendant", vp}};
  inst.params = {{"requested_n", n}, {"n", n}};
  if (!is_dominating(inst.graph, inst.planted_opt))
    throw FamilyError("clique_pendant: planted set does not dominate");
  return inst;
}

// Two stars whose hubs cover half the graph, connected through exactly one of
// many look-alike paths, padded with isolated nodes. Covering rho = 1/2
// locally requires either finding the small star by jumping or telling the
// special path apart from the rest.
inline FamilyInstance two_stars_paths(int n, int k, std::uint64_t seed) {
  if (k < 1) throw FamilyError("two_stars_paths: need k >= 1");
  const long long sq = detail::isqrt_floor(n);
  const long long big_leaves = (n + 1) / 2 - sq - 1;  // ceil(n/2) - sq - 1
  const long long small_total = sq;                   // hub + sq-1 leaves
  const long long base_isolated = sq;
  const long long budget = n - (1 + big_leaves) - small_total - base_isolated;
  const long long path_count = budget / (k + 1);
  if (big_leaves < 2 || small_total < 2 || path_count < 1 || path_count > big_leaves)
    throw FamilyError("two_stars_paths: n too small for the construction");
  const long long isolated = base_isolated + (budget - path_count * (k + 1));

  Rng rng(seed);
  detail::Placement place(n, rng);
  // slot layout: 1 = big hub, 2..big_leaves+1 = big leaves, then small hub,
  // small leaves, path nodes, isolated pad
  int next = 1;
  const NodeId big_hub = place[next++];
  std::vector<NodeId> bleaves;
  for (long long i = 0; i < big_leaves; ++i) bleaves.push_back(place[next++]);
  const NodeId small_hub = place[next++];
  std::vector<NodeId> sleaves;
  for (long long i = 0; i < small_total - 1; ++i) sleaves.push_back(place[next++]);

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId x : bleaves) edges.emplace_back(big_hub, x);
  for (NodeId x : sleaves) edges.emplace_back(small_hub, x);

  const long long special = rng.uniform_int(0, path_count - 1);
  NodeId far_end_of_special = 0;
  for (long long p = 0; p < path_count; ++p) {
    NodeId prev = bleaves[static_cast<std::size_t>(p)];
    for (int j = 0; j < k + 1; ++j) {
      const NodeId node = place[next++];
      edges.emplace_back(prev, node);
      prev = node;
    }
    if (p == special) {
      edges.emplace_back(prev, small_hub);
      far_end_of_special = prev;
    }
  }
  // remaining slots stay isolated
  (void)isolated;

  FamilyInstance inst;
  inst.family = "two_stars_paths";
  inst.graph = Graph(n, edges);
  inst.planted_opt = {big_hub, small_hub};
  inst.special_nodes = {{"v", big_hub}, {"u", small_hub}, {"bridge_end", far_end_of_special}};
  inst.params = {{"requested_n", n}, {"n", n},       {"k", k},
                 {"path_count", path_count},          {"isolated", isolated},
                 {"big_leaves", big_leaves}};
  if (2 * dominated_set(inst.graph, inst.planted_opt).size() < static_cast<std::size_t>(n))
    throw FamilyError("two_stars_paths: planted hubs cover less than half");
  return inst;
}

// Big star joined leaf-to-leaf to a small star, with k big-star spokes given
// one pendant each. The hubs leave exactly the k pendants uncovered, so the
// planted neighbor-collecting value is 2c + k.
inline FamilyInstance stars_with_pendants(int n, int k, std::uint64_t seed) {
  if (k < 1) throw FamilyError("stars_with_pendants: need k >= 1");
  const long long sq = detail::isqrt_floor(n);
  const long long big_total = n - sq - k;
  if (n - sq - 2LL * k < 3 || sq < 2 || big_total - 1 < k + 1)
    throw FamilyError("stars_with_pendants: n too small");

  Rng rng(seed);
  detail::Placement place(n, rng);
  int next = 1;
  const NodeId big_hub = place[next++];
  std::vector<NodeId> bleaves;
  for (long long i = 0; i < big_total - 1; ++i) bleaves.push_back(place[next++]);
  const NodeId small_hub = place[next++];
  std::vector<NodeId> sleaves;
  for (long long i = 0; i < sq - 1; ++i) sleaves.push_back(place[next++]);

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId x : bleaves) edges.emplace_back(big_hub, x);
  for (NodeId x : sleaves) edges.emplace_back(small_hub, x);
  edges.emplace_back(bleaves[0], sleaves[0]);  // leaf-to-leaf join
  std::vector<NodeId> pendants;
  for (int i = 0; i < k; ++i) {
    const NodeId pend = place[next++];
    pendants.push_back(pend);
    edges.emplace_back(bleaves[static_cast<std::size_t>(1 + i)], pend);
  }

  FamilyInstance inst;
  inst.family = "stars_with_pendants";
  inst.graph = Graph(n, edges);
  inst.planted_opt = {big_hub, small_hub};
  inst.planted_uncovered = k;
  inst.special_nodes = {{"big_hub", big_hub}, {"small_hub", small_hub}};
  inst.params = {{"requested_n", n}, {"n", n}, {"k", k}};
  const auto dom = dominated_set(inst.graph, inst.planted_opt);
  if (static_cast<long long>(n - dom.size()) != k)
    throw FamilyError("stars_with_pendants: uncovered count mismatch");
  return inst;
}

// Clique minus one edge (u,v), a star rooted at r, and a bridge from a star
// leaf to v. {r, v} costs 2c and leaves only u undominated; all clique nodes
// share one degree, hiding v from one-hop inspection.
inline FamilyInstance clique_star(int n, std::uint64_t seed) {
  if (n < 9) throw FamilyError("clique_star: need n >= 9");
  const long long sq = detail::isqrt_floor(n);
  const int cn = static_cast<int>(n - sq);  // clique size
  if (cn < 4 || sq < 2) throw FamilyError("clique_star: n too small");

  Rng rng(seed);
  detail::Placement place(n, rng);
  const int u_slot = static_cast<int>(rng.uniform_int(1, cn));
  int v_slot = static_cast<int>(rng.uniform_int(1, cn - 1));
  if (v_slot >= u_slot) ++v_slot;

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 1; i <= cn; ++i) {
    for (int j = i + 1; j <= cn; ++j) {
      if ((i == u_slot && j == v_slot) || (i == v_slot && j == u_slot)) continue;
      edges.emplace_back(place[i], place[j]);
    }
  }
  const NodeId root = place[cn + 1];
  std::vector<NodeId> star_leaves;
  for (long long i = 0; i < sq - 1; ++i) {
    const NodeId leaf = place[static_cast<int>(cn + 2 + i)];
    star_leaves.push_back(leaf);
    edges.emplace_back(root, leaf);
  }
  const NodeId u = place[u_slot], v = place[v_slot];
  const NodeId vp = star_leaves[0];
  edges.emplace_back(v, vp);

  FamilyInstance inst;
  inst.family = "clique_star";
  inst.graph = Graph(n, edges);
  inst.planted_opt = {root, v};
  inst.planted_uncovered = 1;  // u is covered by neither hub
  inst.special_nodes = {{"root", root}, {"u", u}, {"v", v}, {"v_prime", vp}};
  inst.params = {{"requested_n", n}, {"n", n}, {"star_size", sq}};
  const auto dom = dominated_set(inst.graph, inst.planted_opt);
  if (static_cast<long long>(n) - static_cast<long long>(dom.size()) != inst.planted_uncovered)
    throw FamilyError("clique_star: uncovered count mismatch");
  return inst;
}

// Dispatch by family name; k and r default to 1 where unused.
inline FamilyInstance make_family(const std::string& name, int n, int r, int k,
                                  std::uint64_t seed) {
  if (name == "broken_paths") return broken_paths(n, r, k, seed);
  if (name == "tree_hub") return tree_hub(n, seed);
  if (name == "clique_pendant") return clique_pendant(n, seed);
  if (name == "two_stars_paths") return two_stars_paths(n, k, seed);
  if (name == "stars_with_pendants") return stars_with_pendants(n, k, seed);
  if (name == "clique_star") return clique_star(n, seed);
  throw FamilyError("unknown family: " + name);
}

}  // namespace netlocal
