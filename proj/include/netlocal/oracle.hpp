#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlocal/graph.hpp"
#include "netlocal/rng.hpp"

namespace netlocal {

// Opaque node handle as seen by an algorithm. Labels are a random permutation
// of 1..n unless the config asks for transparent (debug) labels.
using Label = int;

enum class LabelMode { opaque, transparent };

struct OracleConfig {
  int radius = 1;
  ViewMode mode = ViewMode::open;  // radius 1 + open = "1-local", closed = "1+-local"
  std::uint64_t seed = 0;
  LabelMode label_mode = LabelMode::opaque;
};

// Thrown when an algorithm touches a node outside its visible neighborhood.
// This is a hard failure: it marks the algorithm as non-local.
class LocalityViolation : public std::runtime_error {
 public:
  explicit LocalityViolation(const std::string& msg) : std::runtime_error(msg) { ++count(); }
  static std::atomic<long>& count() {
    static std::atomic<long> c{0};
    return c;
  }
};

// Crawling a node already in S; the state is unchanged.
class AlreadyQueried : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QueryEntry {
  enum class Kind { jump, crawl };
  int step = 0;  // 1-based
  Kind kind = Kind::jump;
  Label label = 0;
};

inline const char* to_string(QueryEntry::Kind k) {
  return k == QueryEntry::Kind::jump ? "jump" : "crawl";
}

struct QueryLog {
  std::vector<QueryEntry> entries;
  long long jumps = 0;
  long long crawls = 0;

  long long query_count() const { return jumps + crawls; }

  void append(QueryEntry::Kind kind, Label label) {
    entries.push_back({static_cast<int>(entries.size()) + 1, kind, label});
    if (kind == QueryEntry::Kind::jump) ++jumps; else ++crawls;
  }

  // One JSON object per line: {"step":k,"kind":"crawl","label":L}
  void write_jsonl(std::ostream& os) const {
    for (const auto& e : entries) {
      os << "{\"step\":" << e.step << ",\"kind\":\"" << to_string(e.kind)
         << "\",\"label\":" << e.label << "}\n";
    }
  }
};

// Enforces the local-information model over a hidden graph: algorithms learn
// the r-open (or r-closed) neighborhood of their queried set S and pay one
// query per jump or crawl. Harness-side probes answer from the hidden graph
// without counting as queries.
class Oracle {
 public:
  Oracle(const Graph& g, const OracleConfig& cfg, std::optional<NodeId> seed_node = std::nullopt)
      : g_(g),
        cfg_(cfg),
        jump_rng_(derive_seed(cfg.seed, 0x6a756d70)),
        label_of_(g.node_count() + 1),
        index_of_(g.node_count() + 1),
        dist_(g.node_count() + 1, kInf),
        dominated_(g.node_count() + 1, 0) {
    if (cfg.radius < 1) throw GraphError("oracle radius must be >= 1");
    for (NodeId v = 0; v <= g.node_count(); ++v) label_of_[v] = v;
    if (cfg.label_mode == LabelMode::opaque) {
      Rng perm_rng(derive_seed(cfg.seed, 0x6c61626c));
      for (NodeId v = g.node_count(); v >= 2; --v) {
        const NodeId w = static_cast<NodeId>(perm_rng.uniform_int(1, v));
        std::swap(label_of_[v], label_of_[w]);
      }
    }
    for (NodeId v = 1; v <= g.node_count(); ++v) index_of_[label_of_[v]] = v;
    if (seed_node) {
      g_.check_node(*seed_node);
      add_to_queried(*seed_node);
    }
  }

  const OracleConfig& config() const { return cfg_; }
  int node_count() const { return g_.node_count(); }
  bool empty() const { return queried_.empty(); }
  const QueryLog& log() const { return log_; }
  long long query_count() const { return log_.query_count(); }

  // --- algorithm-facing operations -------------------------------------

  // Uniform draw over all n nodes, with replacement; always costs a query.
  Label jump() {
    const NodeId v = static_cast<NodeId>(jump_rng_.uniform_int(1, g_.node_count()));
    const Label lab = label_of_[v];
    log_.append(QueryEntry::Kind::jump, lab);
    if (!queried_.contains(v)) add_to_queried(v);
    return lab;
  }

  // Adds a currently visible non-member to S.
  void crawl(Label target) {
    const NodeId v = index_checked(target);
    if (dist_[v] > cfg_.radius) {
      throw LocalityViolation("crawl target not visible: label " + std::to_string(target));
    }
    if (queried_.contains(v)) {
      throw AlreadyQueried("crawl target already queried: label " + std::to_string(target));
    }
    log_.append(QueryEntry::Kind::crawl, target);
    add_to_queried(v);
  }

  // Full snapshot of the visible neighborhood, in label space. Empty S gives
  // an empty view; callers can check empty().
  LocalView current_view() const {
    LocalView view;
    view.mode = cfg_.mode;
    if (queried_.empty()) return view;
    const LocalView hidden = neighborhood_view(g_, queried_, cfg_.radius, cfg_.mode);
    for (const auto& [v, deg] : hidden.degrees) view.degrees[label_of_[v]] = deg;
    for (NodeId v : hidden.frontier) view.frontier.insert(label_of_[v]);
    for (const auto& [u, v] : hidden.edges) {
      const Label a = label_of_[u], b = label_of_[v];
      view.edges.insert({std::min(a, b), std::max(a, b)});
    }
    return view;
  }

  // Cheap accessors backed by incrementally maintained state. They expose the
  // same information as current_view().
  const std::set<Label>& frontier() const { return frontier_; }

  bool visible(Label lab) const {
    const NodeId v = index_checked(lab);
    return dist_[v] <= cfg_.radius;
  }

  bool queried(Label lab) const { return queried_.contains(index_checked(lab)); }

  int degree_of(Label lab) const {
    const NodeId v = index_checked(lab);
    if (dist_[v] > cfg_.radius)
      throw LocalityViolation("degree of invisible node: label " + std::to_string(lab));
    return g_.degree(v);
  }

  // Distinct neighbors of a visible node reachable through visible edges
  // (mode rule applied), as labels.
  std::vector<Label> visible_neighbors(Label lab) const {
    const NodeId v = index_checked(lab);
    if (dist_[v] > cfg_.radius)
      throw LocalityViolation("neighbors of invisible node: label " + std::to_string(lab));
    std::vector<Label> out;
    g_.for_each_distinct_neighbor(v, [&](NodeId w) {
      if (dist_[w] > cfg_.radius) return;
      if (cfg_.mode == ViewMode::open && dist_[v] == cfg_.radius && dist_[w] == cfg_.radius)
        return;
      out.push_back(label_of_[w]);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  // |N(v) \ D(S)| for a visible node: how many new nodes crawling v would
  // dominate. Distinct neighbors only; self-loops ignored. Requires the
  // closed view, which is the visibility level that makes this quantity
  // computable.
  int coverage_gain(Label lab) const {
    if (cfg_.mode != ViewMode::closed)
      throw LocalityViolation("coverage gain requires the closed view");
    const NodeId v = index_checked(lab);
    if (dist_[v] > cfg_.radius)
      throw LocalityViolation("coverage gain of invisible node: label " + std::to_string(lab));
    int gain = 0;
    g_.for_each_distinct_neighbor(v, [&](NodeId w) {
      if (!dominated_[w]) ++gain;
    });
    return gain;
  }

  // --- harness-side probes (never counted as queries) -------------------

  bool probe_root_hit() const { return g_.node_count() >= 1 && queried_.contains(1); }

  NodeId probe_node_index(Label lab) const { return index_checked(lab); }

  Label label_of_index(NodeId v) const {
    g_.check_node(v);
    return label_of_[v];
  }

  // Harness facility: place v in S as if a jump had landed on it. Costs no
  // query; state maintenance is identical to a real addition.
  void harness_add_member(NodeId v) {
    g_.check_node(v);
    if (!queried_.contains(v)) add_to_queried(v);
  }

  // |D(S)| in the hidden graph; the termination facility behind loop guards
  // like "while D(S) != V".
  long long dominated_count() const { return dominated_count_; }

  bool probe_is_dominating() const { return dominated_count_ == g_.node_count(); }

  const VertexSet& queried_set() const { return queried_; }
  const Graph& hidden_graph() const { return g_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  NodeId index_checked(Label lab) const {
    if (lab < 1 || lab > g_.node_count())
      throw GraphError("invalid label " + std::to_string(lab));
    return index_of_[lab];
  }

  void add_to_queried(NodeId v) {
    queried_.insert(v);
    if (!dominated_[v]) {
      dominated_[v] = 1;
      ++dominated_count_;
    }
    g_.for_each_distinct_neighbor(v, [&](NodeId w) {
      if (!dominated_[w]) {
        dominated_[w] = 1;
        ++dominated_count_;
      }
    });
    relax_distances(v);
  }

  // dist_ holds min distance to S; adding v can only lower it. Bounded BFS
  // from v updates dist_ and the frontier set.
  void relax_distances(NodeId v) {
    if (dist_[v] == 0) return;
    std::vector<NodeId> layer{v};
    set_dist(v, 0);
    for (int depth = 1; depth <= cfg_.radius && !layer.empty(); ++depth) {
      std::vector<NodeId> next;
      for (NodeId u : layer) {
        g_.for_each_distinct_neighbor(u, [&](NodeId w) {
          if (dist_[w] > depth) {
            set_dist(w, depth);
            next.push_back(w);
          }
        });
      }
      layer.swap(next);
    }
  }

  void set_dist(NodeId v, int d) {
    const int old = dist_[v];
    if (old == cfg_.radius) frontier_.erase(label_of_[v]);
    dist_[v] = d;
    if (d == cfg_.radius) frontier_.insert(label_of_[v]);
  }

  const Graph& g_;
  OracleConfig cfg_;
  Rng jump_rng_;
  std::vector<Label> label_of_;
  std::vector<NodeId> index_of_;
  std::vector<int> dist_;
  std::vector<char> dominated_;
  long long dominated_count_ = 0;
  std::set<Label> frontier_;
  VertexSet queried_;
  QueryLog log_;
};

}  // namespace netlocal
