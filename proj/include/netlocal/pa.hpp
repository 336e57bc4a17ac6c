#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netlocal/graph.hpp"
#include "netlocal/rng.hpp"

namespace netlocal {

struct PaParams {
  int n = 1;
  int m = 1;
  std::uint64_t seed = 0;
};

// Parents p_k(t) for t in 1..n, k in 1..m; always p_k(t) <= t.
class ParentRecord {
 public:
  ParentRecord(int n, int m) : n_(n), m_(m), parents_(static_cast<std::size_t>(n) * m, 0) {}

  NodeId parent(int t, int k) const {
    return parents_[static_cast<std::size_t>(t - 1) * m_ + (k - 1)];
  }
  void set_parent(int t, int k, NodeId p) {
    parents_[static_cast<std::size_t>(t - 1) * m_ + (k - 1)] = p;
  }
  int node_count() const { return n_; }
  int edges_per_node() const { return m_; }

 private:
  int n_;
  int m_;
  std::vector<NodeId> parents_;
};

// Node weights w_i with prefix sums W_i (W_0 = 0, W strictly increasing,
// W_n <= 1).
struct WeightSequence {
  std::vector<double> prefix;  // prefix[i] = W_i, prefix[0] = 0

  int size() const { return static_cast<int>(prefix.size()) - 1; }
  double W(int i) const { return prefix[static_cast<std::size_t>(i)]; }
  double w(int i) const { return prefix[i] - prefix[i - 1]; }
};

// Grown one node at a time: node 1 starts with m self-loops; node t >= 2
// forms m edges back into [t] sequentially, choosing s with probability
// deg(s)/z (or (deg(t)+1)/z for s = t), degrees updated between draws.
inline std::pair<Graph, ParentRecord> generate_sequential(const PaParams& p) {
  Rng rng(p.seed);
  ParentRecord parents(p.n, p.m);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(p.n) * p.m);
  // endpoints[i] lists each edge endpoint once, so a node appears deg times.
  std::vector<NodeId> endpoints;
  endpoints.reserve(static_cast<std::size_t>(p.n) * p.m * 2);

  for (int k = 1; k <= p.m; ++k) {
    parents.set_parent(1, k, 1);
    edges.emplace_back(1, 1);
    endpoints.push_back(1);
    endpoints.push_back(1);
  }
  for (int t = 2; t <= p.n; ++t) {
    for (int k = 1; k <= p.m; ++k) {
      // z = sum of degrees + 1; the extra slot is t's self-preference.
      const std::uint64_t z = endpoints.size() + 1;
      const std::uint64_t draw =
          static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(z) - 1));
      const NodeId s = draw == endpoints.size() ? t : endpoints[draw];
      parents.set_parent(t, k, s);
      edges.emplace_back(t, s);
      endpoints.push_back(t);
      endpoints.push_back(s);
    }
  }
  return {Graph(p.n, edges), std::move(parents)};
}

// Parent draw under a fixed weight sequence: P[p_k(i) = j] = w_j / W_i for
// j <= i. Implemented as inverse transform over the prefix sums.
inline NodeId draw_parent(const WeightSequence& ws, int i, Rng& rng) {
  const double u = rng.uniform() * ws.W(i);
  // smallest j with W_j > u
  auto it = std::upper_bound(ws.prefix.begin() + 1, ws.prefix.begin() + i + 1, u);
  NodeId j = static_cast<NodeId>(it - ws.prefix.begin());
  if (j > i) j = i;
  return j;
}

struct WeightedPaResult {
  Graph graph;
  ParentRecord parents;
  WeightSequence weights;
};

// Weight-sequence process: draw mn uniform pairs (x,y) with x < y, sort so
// the y's increase in lexicographic index order, set W_i = y_{i,m}, then give
// each node i its m parents with P[p_k(i) = j] = w_j / W_i (self-loop at
// j = i allowed).
inline WeightedPaResult generate_weighted(const PaParams& p) {
  Rng rng(p.seed);
  const std::size_t total = static_cast<std::size_t>(p.n) * p.m;
  std::vector<double> ys(total);
  for (std::size_t i = 0; i < total; ++i) {
    double x = rng.uniform();
    double y = rng.uniform();
    if (x > y) std::swap(x, y);
    ys[i] = y;  // x is consumed by the conditioning and not used further
  }
  std::sort(ys.begin(), ys.end());

  WeightSequence ws;
  ws.prefix.resize(p.n + 1);
  ws.prefix[0] = 0.0;
  for (int i = 1; i <= p.n; ++i) ws.prefix[i] = ys[static_cast<std::size_t>(i) * p.m - 1];

  ParentRecord parents(p.n, p.m);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(total);
  for (int i = 1; i <= p.n; ++i) {
    for (int k = 1; k <= p.m; ++k) {
      const NodeId j = draw_parent(ws, i, rng);
      parents.set_parent(i, k, j);
      edges.emplace_back(i, j);
    }
  }
  return {Graph(p.n, edges), std::move(parents), std::move(ws)};
}

// Analytic thresholds used by the structural diagnostics. All logarithms are
// natural; the dyadic interval indexing I_t = [2^t+1, 2^{t+1}] is kept for
// reference alongside beta.
struct DiagnosticsParams {
  int n = 0;
  double s0 = 0.0;
  double s1 = 0.0;
  double zeta = 30.0;
  double beta = 0.25;

  static DiagnosticsParams for_n(int n) {
    DiagnosticsParams d;
    d.n = n;
    if (n >= 16) {
      const double ln = std::log(static_cast<double>(n));
      const double lnln = std::log(ln);
      d.s0 = 160.0 * ln * lnln * lnln;
      d.s1 = static_cast<double>(n) / (std::pow(2.0, 25) * ln * ln);
    }
    return d;
  }
};

// A node is typical when its weight is not too small for its age, or it is
// among the first s0 nodes.
inline bool classify_typical(const WeightSequence& ws, int i, const DiagnosticsParams& d) {
  if (i <= d.s0) return true;
  return ws.w(i) >= 1.0 / (d.zeta * std::sqrt(static_cast<double>(i) * d.n));
}

enum class EventStatus { passed, failed, not_applicable };

inline const char* to_string(EventStatus s) {
  switch (s) {
    case EventStatus::passed: return "passed";
    case EventStatus::failed: return "failed";
    default: return "not_applicable";
  }
}

struct DiagnosticEvent {
  std::string name;
  EventStatus status = EventStatus::not_applicable;
  NodeId worst_index = 0;     // most violating index when failed
  double worst_margin = 0.0;  // observed - bound (signed toward violation)
};

struct DiagnosticsReport {
  std::vector<DiagnosticEvent> events;
  long long loop_count = 0;  // total self-loops in the graph
  int root_degree = 0;
  int max_degree_value = 0;

  const DiagnosticEvent& event(const std::string& name) const {
    for (const auto& e : events)
      if (e.name == name) return e;
    throw GraphError("unknown diagnostic event: " + name);
  }
};

// Structural checks on a generated graph: (a) old nodes are not too heavy,
// (b) early nodes are heavy, (c) the root is heavy, (d) with weights present,
// W_i tracks sqrt(i/n) within 1%. These hold with probability 1-o(1) over the
// process, so callers should aggregate over seeds rather than assert per run.
inline DiagnosticsReport degree_diagnostics(const Graph& g, int m,
                                            const WeightSequence* ws,
                                            const DiagnosticsParams& d) {
  DiagnosticsReport rep;
  const int n = g.node_count();
  const double ln = n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
  const double sqn = std::sqrt(static_cast<double>(n));
  rep.loop_count = g.total_loops();
  rep.root_degree = n >= 1 ? g.degree(1) : 0;
  rep.max_degree_value = n >= 1 ? max_degree(g).second : 0;

  const bool applicable = d.s0 > 0.0 && d.s0 < static_cast<double>(n);

  DiagnosticEvent a{"old_nodes_light", EventStatus::not_applicable, 0, 0.0};
  DiagnosticEvent b{"early_nodes_heavy", EventStatus::not_applicable, 0, 0.0};
  DiagnosticEvent c{"root_heavy", EventStatus::not_applicable, 0, 0.0};
  DiagnosticEvent e1{"weights_track_sqrt", EventStatus::not_applicable, 0, 0.0};

  if (applicable) {
    a.status = EventStatus::passed;
    const int lo = static_cast<int>(std::ceil(d.s0));
    for (NodeId i = lo; i <= n; ++i) {
      const double bound = 6.0 * m * ln * std::sqrt(static_cast<double>(n) / i);
      const double excess = g.degree(i) - bound;
      if (excess > 0 && (a.status == EventStatus::passed || excess > a.worst_margin)) {
        a.status = EventStatus::failed;
        a.worst_index = i;
        a.worst_margin = excess;
      }
    }

    b.status = EventStatus::passed;
    const int hi = std::min(n, static_cast<int>(std::floor(d.s0)));
    const double floor_deg = m * sqn / (5.0 * ln * ln);
    for (NodeId i = 1; i <= hi; ++i) {
      const double deficit = floor_deg - g.degree(i);
      if (deficit > 0 && (b.status == EventStatus::passed || deficit > b.worst_margin)) {
        b.status = EventStatus::failed;
        b.worst_index = i;
        b.worst_margin = deficit;
      }
    }
  }

  if (n >= 2) {
    const double root_floor = m * sqn / ln;
    c.status = g.degree(1) >= root_floor ? EventStatus::passed : EventStatus::failed;
    if (c.status == EventStatus::failed) {
      c.worst_index = 1;
      c.worst_margin = root_floor - g.degree(1);
    }
  }

  if (ws != nullptr && applicable && ws->size() == n) {
    e1.status = EventStatus::passed;
    const int lo = static_cast<int>(std::ceil(d.s0));
    for (int i = lo; i <= n; ++i) {
      const double target = std::sqrt(static_cast<double>(i) / n);
      const double dev = std::abs(ws->W(i) - target) - 0.01 * target;
      if (dev > 0 && (e1.status == EventStatus::passed || dev > e1.worst_margin)) {
        e1.status = EventStatus::failed;
        e1.worst_index = i;
        e1.worst_margin = dev;
      }
    }
  }

  rep.events = {a, b, c, e1};
  return rep;
}

// Sidecar format: one "i w_i W_i" line per node at full decimal precision.
inline void write_weight_sequence(const WeightSequence& ws, std::ostream& os) {
  os << std::setprecision(17);
  for (int i = 1; i <= ws.size(); ++i) {
    os << i << ' ' << ws.w(i) << ' ' << ws.W(i) << '\n';
  }
}

inline void save_weight_sequence(const WeightSequence& ws, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw GraphError("cannot open for write: " + path);
  write_weight_sequence(ws, os);
}

inline WeightSequence parse_weight_sequence(std::istream& is) {
  WeightSequence ws;
  ws.prefix.push_back(0.0);
  int i;
  double w, W;
  while (is >> i >> w >> W) ws.prefix.push_back(W);
  return ws;
}

}  // namespace netlocal
