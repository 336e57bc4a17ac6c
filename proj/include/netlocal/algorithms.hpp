#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netlocal/graph.hpp"
#include "netlocal/oracle.hpp"
#include "netlocal/rng.hpp"

namespace netlocal {

struct BudgetPolicy {
  enum class StopRule { root_found, full_domination, coverage_threshold, budget_exhausted };

  long long max_queries = 1;
  StopRule stop_rule = StopRule::budget_exhausted;
  double rho = 1.0;  // coverage_threshold only

  static BudgetPolicy root_search(long long max_queries) {
    return {max_queries, StopRule::root_found, 1.0};
  }
  static BudgetPolicy dominate(long long max_queries = std::numeric_limits<long long>::max()) {
    return {max_queries, StopRule::full_domination, 1.0};
  }
  static BudgetPolicy cover(double rho,
                            long long max_queries = std::numeric_limits<long long>::max()) {
    return {max_queries, StopRule::coverage_threshold, rho};
  }
};

struct RunResult {
  std::string algorithm;
  VertexSet output_set;  // labels (hidden indices for st_connect's union)
  QueryLog queries;
  long long set_size = 0;
  long long dominated_count = 0;
  std::optional<long long> root_hit_step;
  long long steps = 0;
  bool success = false;
  std::string status = "ok";  // ok | stranded | budget-exhausted

  // context filled by the harness
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;

  // objective-specific extras
  double best_prefix_ratio = 0.0;    // gain-per-cost: max |D(prefix)|/|prefix|
  double best_singleton_gain = 0.0;  // gain-per-cost: best 1 + |N(v)|
  double f_value = std::numeric_limits<double>::quiet_NaN();  // neighbor collecting
  std::vector<std::pair<Label, int>> ranked_by_degree;        // top-k output

  nlohmann::json to_json() const {
    nlohmann::json j{{"algorithm", algorithm}, {"n", n},
                     {"seed", seed},           {"queries", queries.query_count()},
                     {"set_size", set_size},   {"dominated", dominated_count}};
    j["m"] = m > 0 ? nlohmann::json(m) : nlohmann::json(nullptr);
    j["root_hit_step"] = root_hit_step ? nlohmann::json(*root_hit_step) : nlohmann::json(nullptr);
    j["f_value"] = std::isnan(f_value) ? nlohmann::json(nullptr) : nlohmann::json(f_value);
    return j;
  }
};

namespace detail {

inline void require_one_local(const Oracle& oracle, const char* who) {
  if (oracle.config().radius != 1 || oracle.config().mode != ViewMode::open)
    throw GraphError(std::string(who) + " requires a 1-local oracle (radius 1, open view)");
}

inline void require_one_plus_local(const Oracle& oracle, const char* who) {
  if (oracle.config().radius != 1 || oracle.config().mode != ViewMode::closed)
    throw GraphError(std::string(who) + " requires a 1+-local oracle (radius 1, closed view)");
}

// Uniform argmax over the frontier by a single reservoir pass. Returns 0 when
// the frontier is empty.
template <typename Score>
Label frontier_argmax(const Oracle& oracle, Rng& rng, Score&& score) {
  Label chosen = 0;
  long long best = std::numeric_limits<long long>::min();
  long long ties = 0;
  for (Label lab : oracle.frontier()) {
    const long long s = score(lab);
    if (s > best) {
      best = s;
      chosen = lab;
      ties = 1;
    } else if (s == best) {
      ++ties;
      if (rng.uniform_int(1, ties) == 1) chosen = lab;
    }
  }
  return chosen;
}

inline void finish(RunResult& r, const Oracle& oracle) {
  r.queries = oracle.log();
  r.set_size = static_cast<long long>(oracle.queried_set().size());
  r.dominated_count = oracle.dominated_count();
  r.n = oracle.node_count();
  for (NodeId v : oracle.queried_set()) r.output_set.insert(oracle.label_of_index(v));
}

}  // namespace detail

// Greedy ascent: repeatedly crawl a maximum-degree visible non-member until
// the root (node 1) is in S. Ties are broken uniformly at random. Termination
// detection is a harness probe and costs nothing.
inline RunResult traverse_to_root(Oracle& oracle, Rng& rng, const BudgetPolicy& budget) {
  detail::require_one_local(oracle, "traverse_to_root");
  if (oracle.empty()) throw GraphError("traverse_to_root requires a seeded oracle");
  RunResult r;
  r.algorithm = "traverse";
  if (oracle.probe_root_hit()) {
    r.success = true;
    r.root_hit_step = 0;
  }
  while (!r.success && oracle.query_count() < budget.max_queries) {
    const Label next = detail::frontier_argmax(oracle, rng,
                                               [&](Label lab) { return oracle.degree_of(lab); });
    if (next == 0) {
      r.status = "stranded";
      break;
    }
    oracle.crawl(next);
    ++r.steps;
    if (oracle.probe_root_hit()) {
      r.success = true;
      r.root_hit_step = oracle.query_count();
    }
  }
  if (!r.success && r.status == "ok") r.status = "budget-exhausted";
  detail::finish(r, oracle);
  return r;
}

struct StConnectResult {
  RunResult combined;       // output_set holds hidden node indices
  RunResult from_s;
  RunResult from_t;
  bool success = false;
};

// Runs the root traversal from both endpoints and joins the two queried sets
// at the root. The union induces a connected subgraph containing s and t.
inline StConnectResult st_connect(const Graph& g, NodeId s, NodeId t, const OracleConfig& base,
                                  Rng& rng, const BudgetPolicy& budget) {
  g.check_node(s);
  g.check_node(t);
  StConnectResult out;
  out.combined.algorithm = "stconnect";
  out.combined.n = g.node_count();
  if (s == t) {
    out.success = true;
    out.combined.success = true;
    out.combined.output_set.insert(s);
    out.combined.set_size = 1;
    return out;
  }
  OracleConfig cfg_s = base, cfg_t = base;
  cfg_s.seed = derive_seed(base.seed, 0x731);
  cfg_t.seed = derive_seed(base.seed, 0x732);
  Oracle oracle_s(g, cfg_s, s);
  Oracle oracle_t(g, cfg_t, t);
  Rng rng_s = rng.split(0x731);
  Rng rng_t = rng.split(0x732);
  out.from_s = traverse_to_root(oracle_s, rng_s, budget);
  out.from_t = traverse_to_root(oracle_t, rng_t, budget);
  out.success = out.from_s.success && out.from_t.success;
  out.combined.success = out.success;
  for (NodeId v : oracle_s.queried_set()) out.combined.output_set.insert(v);
  for (NodeId v : oracle_t.queried_set()) out.combined.output_set.insert(v);
  out.combined.set_size = static_cast<long long>(out.combined.output_set.size());
  out.combined.steps = out.from_s.steps + out.from_t.steps;
  for (const auto& e : out.from_s.queries.entries)
    out.combined.queries.append(e.kind, e.label);
  for (const auto& e : out.from_t.queries.entries)
    out.combined.queries.append(e.kind, e.label);
  if (!out.success) out.combined.status = "traversal-failed";
  return out;
}

// Root traversal plus k more greedy crawls; reports the k highest-degree
// members found, ties shuffled randomly rather than by label.
inline RunResult top_k_degrees(Oracle& oracle, Rng& rng, int k, const BudgetPolicy& budget) {
  detail::require_one_local(oracle, "top_k_degrees");
  if (k < 1) throw GraphError("top_k_degrees: k must be >= 1");
  RunResult r = traverse_to_root(oracle, rng, budget);
  r.algorithm = "topk";
  for (int extra = 0; extra < k && oracle.query_count() < budget.max_queries; ++extra) {
    const Label next = detail::frontier_argmax(oracle, rng,
                                               [&](Label lab) { return oracle.degree_of(lab); });
    if (next == 0) break;
    oracle.crawl(next);
    ++r.steps;
  }
  std::vector<std::pair<Label, int>> members;
  for (NodeId v : oracle.queried_set()) {
    const Label lab = oracle.label_of_index(v);
    members.emplace_back(lab, oracle.degree_of(lab));
  }
  std::vector<std::uint64_t> salt(members.size());
  for (auto& x : salt) x = rng.next_u64();
  std::vector<std::size_t> idx(members.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].second != members[b].second) return members[a].second > members[b].second;
    return salt[a] < salt[b];
  });
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), members.size());
  for (std::size_t i = 0; i < take; ++i) r.ranked_by_degree.push_back(members[idx[i]]);
  // refresh set-level fields after the extra crawls
  r.output_set = VertexSet{};
  detail::finish(r, oracle);
  return r;
}

// Root traversal scored by coverage-per-node: over every prefix of the query
// sequence, the best |D(prefix)| / |prefix|, plus the best single-node ratio
// (1 + distinct degree) seen.
inline RunResult gain_per_cost_run(Oracle& oracle, Rng& rng, const BudgetPolicy& budget) {
  detail::require_one_local(oracle, "gain_per_cost_run");
  RunResult r = traverse_to_root(oracle, rng, budget);
  r.algorithm = "gainpercost";
  const Graph& g = oracle.hidden_graph();
  std::vector<char> dominated(g.node_count() + 1, 0);
  long long covered = 0;
  long long taken = 0;
  for (NodeId v : oracle.queried_set()) {
    if (!dominated[v]) {
      dominated[v] = 1;
      ++covered;
    }
    g.for_each_distinct_neighbor(v, [&](NodeId w) {
      if (!dominated[w]) {
        dominated[w] = 1;
        ++covered;
      }
    });
    ++taken;
    const double ratio = static_cast<double>(covered) / static_cast<double>(taken);
    r.best_prefix_ratio = std::max(r.best_prefix_ratio, ratio);
    r.best_singleton_gain =
        std::max(r.best_singleton_gain, 1.0 + static_cast<double>(g.distinct_degree(v)));
  }
  return r;
}

// Randomized greedy domination: crawl the frontier node that dominates the
// most new nodes, then crawl one uniformly random neighbor of it. A jump
// rescues runs on graphs where the frontier empties before domination.
inline RunResult alternate_random(Oracle& oracle, Rng& rng,
                                  const BudgetPolicy& budget = BudgetPolicy::dominate()) {
  detail::require_one_plus_local(oracle, "alternate_random");
  if (oracle.empty()) throw GraphError("alternate_random requires a seeded oracle");
  RunResult r;
  r.algorithm = "altrandom";
  const long long n = oracle.node_count();
  while (oracle.dominated_count() < n && oracle.query_count() < budget.max_queries) {
    const Label x = detail::frontier_argmax(oracle, rng,
                                            [&](Label lab) { return oracle.coverage_gain(lab); });
    if (x == 0) {
      oracle.jump();  // disconnected remainder; jumps keep the run local and legal
      ++r.steps;
      continue;
    }
    oracle.crawl(x);
    ++r.steps;
    std::vector<Label> candidates;
    for (Label y : oracle.visible_neighbors(x)) {
      if (!oracle.queried(y)) candidates.push_back(y);
    }
    if (!candidates.empty() && oracle.query_count() < budget.max_queries) {
      oracle.crawl(candidates[rng.index(candidates.size())]);
      ++r.steps;
    }
  }
  r.success = oracle.dominated_count() == n;
  if (!r.success) r.status = "budget-exhausted";
  detail::finish(r, oracle);
  return r;
}

// Partial-coverage variant: every iteration jumps, then does the greedy crawl
// and the random-neighbor crawl, stopping the moment |D(S)| reaches
// ceil(rho * n).
inline RunResult alternate_random_and_jump(Oracle& oracle, Rng& rng, double rho,
                                           const BudgetPolicy& budget = BudgetPolicy::dominate()) {
  detail::require_one_plus_local(oracle, "alternate_random_and_jump");
  if (!(rho > 0.0 && rho <= 1.0)) throw GraphError("alternate_random_and_jump: rho in (0,1]");
  RunResult r;
  r.algorithm = "altjump";
  const long long n = oracle.node_count();
  const long long target = static_cast<long long>(std::ceil(rho * static_cast<double>(n)));
  auto reached = [&]() { return oracle.dominated_count() >= target; };
  while (!reached() && oracle.query_count() < budget.max_queries) {
    oracle.jump();
    ++r.steps;
    if (reached()) break;
    const Label x = detail::frontier_argmax(oracle, rng,
                                            [&](Label lab) { return oracle.coverage_gain(lab); });
    if (x == 0) continue;
    oracle.crawl(x);
    ++r.steps;
    if (reached()) break;
    std::vector<Label> candidates;
    for (Label y : oracle.visible_neighbors(x)) {
      if (!oracle.queried(y)) candidates.push_back(y);
    }
    if (!candidates.empty()) {
      oracle.crawl(candidates[rng.index(candidates.size())]);
      ++r.steps;
    }
  }
  r.success = reached();
  if (!r.success) r.status = "budget-exhausted";
  detail::finish(r, oracle);
  return r;
}

// Neighbor collecting: run the domination algorithm and report
// f(S) = c|S| + (n - |D(S)|).
inline RunResult neighbor_collect(Oracle& oracle, Rng& rng, double c,
                                  const BudgetPolicy& budget = BudgetPolicy::dominate()) {
  if (c < 1.0) throw GraphError("neighbor_collect: c must be >= 1");
  RunResult r = alternate_random(oracle, rng, budget);
  r.algorithm = "neighborcollect";
  r.f_value = c * static_cast<double>(r.set_size) +
              static_cast<double>(oracle.node_count() - r.dominated_count);
  return r;
}

// Degree-only 1-local greedy domination: crawls the highest-degree frontier
// node until everything is dominated. It cannot see how much a node would
// newly cover, which is exactly what makes it slow on the right instances.
inline RunResult greedy_degree_only(Oracle& oracle, Rng& rng,
                                    const BudgetPolicy& budget = BudgetPolicy::dominate()) {
  detail::require_one_local(oracle, "greedy_degree_only");
  if (oracle.empty()) throw GraphError("greedy_degree_only requires a seeded oracle");
  RunResult r;
  r.algorithm = "degreegreedy";
  const long long n = oracle.node_count();
  while (oracle.dominated_count() < n && oracle.query_count() < budget.max_queries) {
    const Label next = detail::frontier_argmax(oracle, rng,
                                               [&](Label lab) { return oracle.degree_of(lab); });
    if (next == 0) {
      oracle.jump();
      ++r.steps;
      continue;
    }
    oracle.crawl(next);
    ++r.steps;
  }
  r.success = oracle.dominated_count() == n;
  if (!r.success) r.status = "budget-exhausted";
  detail::finish(r, oracle);
  return r;
}

// 1-local s-t connector used for the lower-bound demonstrations: walk as deep
// as the view allows (ties random), crawl t the moment it becomes visible.
// Output stays connected because only crawls are used.
inline RunResult local_st_explore(Oracle& oracle, Rng& rng, Label target,
                                  const BudgetPolicy& budget) {
  detail::require_one_local(oracle, "local_st_explore");
  if (oracle.empty()) throw GraphError("local_st_explore requires a seeded oracle");
  RunResult r;
  r.algorithm = "stexplore";
  // depth of each queried node within the observed subgraph
  std::vector<long long> depth_of_label(oracle.node_count() + 1, -1);
  for (NodeId v : oracle.queried_set()) depth_of_label[oracle.label_of_index(v)] = 0;
  auto frontier_depth = [&](Label lab) {
    long long best = -1;
    for (Label u : oracle.visible_neighbors(lab)) {
      if (oracle.queried(u) && depth_of_label[u] >= 0)
        best = std::max(best, depth_of_label[u]);
    }
    return best + 1;
  };
  while (oracle.query_count() < budget.max_queries) {
    if (oracle.queried(target)) {
      r.success = true;
      break;
    }
    if (oracle.visible(target)) {
      oracle.crawl(target);
      ++r.steps;
      depth_of_label[target] = frontier_depth(target);
      r.success = true;
      break;
    }
    const Label next =
        detail::frontier_argmax(oracle, rng, [&](Label lab) { return frontier_depth(lab); });
    if (next == 0) {
      r.status = "stranded";
      break;
    }
    const long long d = frontier_depth(next);
    oracle.crawl(next);
    depth_of_label[next] = d;
    ++r.steps;
  }
  if (!r.success && r.status == "ok") r.status = "budget-exhausted";
  detail::finish(r, oracle);
  return r;
}

}  // namespace netlocal
