#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netlocal/algorithms.hpp"
#include "netlocal/baselines.hpp"
#include "netlocal/families.hpp"
#include "netlocal/graph.hpp"
#include "netlocal/oracle.hpp"
#include "netlocal/pa.hpp"
#include "netlocal/rng.hpp"
#include "netlocal/stats.hpp"

namespace netlocal {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest round-tripping decimal form, so emitted tables are byte-stable and
// parse back to the exact same doubles.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_number(long long v) { return std::to_string(v); }

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != header.size()) throw IoError("row width does not match header");
    rows.push_back(std::move(cells));
  }
};

enum class EmitFormat { csv, json };

inline std::string render_table(const Table& table, EmitFormat format) {
  if (table.rows.empty()) throw IoError("emit_results: no rows to write");
  std::ostringstream os;
  if (format == EmitFormat::csv) {
    auto write_row = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].find(',') != std::string::npos || cells[i].find('\n') != std::string::npos)
          throw IoError("cell contains a delimiter: " + cells[i]);
        if (i) os << ',';
        os << cells[i];
      }
      os << '\n';
    };
    write_row(table.header);
    for (const auto& r : table.rows) write_row(r);
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : table.rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = r[i];
      arr.push_back(obj);
    }
    os << arr.dump(2) << '\n';
  }
  return os.str();
}

inline void emit_results(const Table& table, const std::string& path, EmitFormat format) {
  const std::string body = render_table(table, format);  // render first: no file on error
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + path);
  os << body;
  if (!os) throw IoError("write failed: " + path);
}

inline Table parse_csv(std::istream& is) {
  Table t;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    out.push_back(cur);
    return out;
  };
  if (!std::getline(is, line)) throw IoError("parse_csv: empty input");
  t.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    t.add_row(split(line));
  }
  return t;
}

// Flat key=value description of an experiment; '#' starts a comment.
struct ExperimentSpec {
  std::string kind;                  // scaling | approx | lowerbound | diagnostics
  std::string graph_source = "pa-sequential";  // pa-sequential | pa-weighted | family:<name>
  std::vector<long long> n_values;
  int m = 2;
  int r = 1;
  int k = 1;
  double c = 2.0;
  double rho = 0.5;
  double epsilon = 0.5;
  int trials = 100;
  long long budget = 0;  // 0 = default
  std::uint64_t master_seed = 0;
  std::string problem = "mds";  // approx: mds | partial | neighbor
  int instances = 200;
  int max_n = 16;
  std::string out;  // output file name (relative to --out dir)

  static ExperimentSpec parse(std::istream& is) {
    ExperimentSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw SpecError("spec line " + std::to_string(lineno) + ": expected key=value");
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      if (key == "kind") spec.kind = val;
      else if (key == "graph") spec.graph_source = val;
      else if (key == "n") {
        spec.n_values.clear();
        std::istringstream vs(val);
        std::string tok;
        while (std::getline(vs, tok, ',')) spec.n_values.push_back(std::stoll(trim(tok)));
      } else if (key == "m") spec.m = std::stoi(val);
      else if (key == "r") spec.r = std::stoi(val);
      else if (key == "k") spec.k = std::stoi(val);
      else if (key == "c") spec.c = std::stod(val);
      else if (key == "rho") spec.rho = std::stod(val);
      else if (key == "epsilon") spec.epsilon = std::stod(val);
      else if (key == "trials") spec.trials = std::stoi(val);
      else if (key == "budget") spec.budget = std::stoll(val);
      else if (key == "seed") spec.master_seed = std::stoull(val);
      else if (key == "problem") spec.problem = val;
      else if (key == "instances") spec.instances = std::stoi(val);
      else if (key == "max_n") spec.max_n = std::stoi(val);
      else if (key == "out") spec.out = val;
      else throw SpecError("spec line " + std::to_string(lineno) + ": unknown key " + key);
    }
    if (spec.kind.empty()) throw SpecError("spec: missing kind");
    if (spec.trials < 1) throw SpecError("spec: trials must be >= 1");
    return spec;
  }

  static ExperimentSpec parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open spec: " + path);
    return parse(is);
  }
};

// --- random-graph corpus helpers ----------------------------------------

inline Graph erdos_renyi(int n, double p, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 1; u <= n; ++u)
    for (NodeId v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline bool is_connected(const Graph& g) {
  if (g.node_count() <= 1) return true;
  VertexSet s{1};
  const auto dist = distances_within(g, s, g.node_count());
  for (NodeId v = 1; v <= g.node_count(); ++v)
    if (dist[v] < 0) return false;
  return true;
}

inline Graph random_connected_graph(int n, double p, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = erdos_renyi(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw SpecError("random_connected_graph: could not sample a connected graph");
}

// --- experiment drivers ---------------------------------------------------

namespace detail {

inline std::pair<Graph, std::optional<WeightSequence>> generate_pa(const std::string& source,
                                                                   int n, int m,
                                                                   std::uint64_t seed) {
  PaParams params{n, m, seed};
  if (source == "pa-weighted") {
    auto res = generate_weighted(params);
    return {std::move(res.graph), std::move(res.weights)};
  }
  if (source == "pa-sequential") {
    auto res = generate_sequential(params);
    return {std::move(res.first), std::nullopt};
  }
  throw SpecError("unsupported graph source for this experiment: " + source);
}

inline long long default_traverse_budget(long long n) { return std::min<long long>(n, 1000000); }

}  // namespace detail

// One root-traversal per (n, trial) cell over freshly grown graphs.
// Header: n,m,trial,queries,success,root_hit_step. Each cell also gets a
// summary row (trial = "summary") holding median queries, success rate, and
// mean queries.
inline Table run_scaling_experiment(const ExperimentSpec& spec) {
  if (spec.n_values.empty()) throw SpecError("scaling: n values required");
  Table t;
  t.header = {"n", "m", "trial", "queries", "success", "root_hit_step"};
  for (std::size_t cell = 0; cell < spec.n_values.size(); ++cell) {
    const long long n = spec.n_values[cell];
    std::vector<double> queries;
    long long successes = 0;
    for (int trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t trial_seed =
          derive_seed(spec.master_seed, stream_index(cell, static_cast<std::uint64_t>(trial)));
      auto [graph, weights] =
          detail::generate_pa(spec.graph_source, static_cast<int>(n), spec.m,
                              derive_seed(trial_seed, 1));
      OracleConfig cfg;
      cfg.seed = derive_seed(trial_seed, 2);
      Oracle oracle(graph, cfg,
                    static_cast<NodeId>(Rng(derive_seed(trial_seed, 3)).uniform_int(1, n)));
      Rng alg_rng(derive_seed(trial_seed, 4));
      const long long budget =
          spec.budget > 0 ? spec.budget : detail::default_traverse_budget(n);
      const RunResult res =
          traverse_to_root(oracle, alg_rng, BudgetPolicy::root_search(budget));
      queries.push_back(static_cast<double>(res.queries.query_count()));
      if (res.success) ++successes;
      t.add_row({format_number(n), format_number(static_cast<long long>(spec.m)),
                 format_number(static_cast<long long>(trial)),
                 format_number(res.queries.query_count()),
                 res.success ? "1" : "0",
                 res.root_hit_step ? format_number(*res.root_hit_step) : "-1"});
    }
    const double rate = static_cast<double>(successes) / spec.trials;
    t.add_row({format_number(n), format_number(static_cast<long long>(spec.m)), "summary",
               format_number(median_of(queries)), format_number(rate),
               format_number(mean_of(queries))});
  }
  return t;
}

struct ApproxOutcome {
  Table table;
  // per-instance tail statistics for the domination problem
  std::vector<double> tail_freq;
  std::vector<double> tail_bound;
};

// Random connected instances, exact optimum by exhaustive search, and the
// local algorithm's empirical mean over repeated runs compared against the
// problem's guarantee.
inline ApproxOutcome run_approximation_experiment(const ExperimentSpec& spec) {
  ApproxOutcome out;
  Table& t = out.table;
  const bool mds = spec.problem == "mds";
  t.header = {"instance", "n",     "alg_value",    "exact_value",
              "ratio",    "bound", "within_bound"};
  if (mds) {
    t.header.push_back("tail_freq");
    t.header.push_back("tail_bound");
  }
  for (int inst = 0; inst < spec.instances; ++inst) {
    const std::uint64_t inst_seed =
        derive_seed(spec.master_seed, stream_index(0x1000, static_cast<std::uint64_t>(inst)));
    Rng corpus_rng(derive_seed(inst_seed, 1));
    const int n = static_cast<int>(corpus_rng.uniform_int(4, spec.max_n));
    Graph g = random_connected_graph(n, 0.3, corpus_rng);
    const double h_delta = harmonic_number(max_degree(g).second);

    double exact_value = 0.0, bound = 0.0;
    long long cover_target = 0;
    if (spec.problem == "mds") {
      const ExactSolution sol = brute_force_mds(g);
      exact_value = sol.optimum_value;
      bound = 2.0 * (1.0 + h_delta) * exact_value + 1.0;
    } else if (spec.problem == "partial") {
      cover_target =
          static_cast<long long>(std::ceil(spec.rho * (1.0 + spec.epsilon) * n));
      cover_target = std::min<long long>(cover_target, n);
      const ExactSolution sol =
          brute_force_partial_cover(g, static_cast<int>(cover_target));
      exact_value = sol.optimum_value;
      bound = 3.0 * exact_value / (spec.rho * spec.epsilon) * h_delta;
    } else if (spec.problem == "neighbor") {
      const ExactSolution sol = brute_force_neighbor_collect(g, spec.c);
      exact_value = sol.optimum_value;
      bound = 2.0 * spec.c * (1.0 + h_delta) * exact_value;
    } else {
      throw SpecError("approx: unknown problem " + spec.problem);
    }

    std::vector<double> values;
    long long tail_hits = 0;
    const double tail_threshold = 2.0 * (2.0 + h_delta) * exact_value;
    for (int run = 0; run < spec.trials; ++run) {
      const std::uint64_t run_seed = derive_seed(inst_seed, 0x100 + run);
      OracleConfig cfg;
      cfg.mode = ViewMode::closed;
      cfg.seed = derive_seed(run_seed, 1);
      Rng alg_rng(derive_seed(run_seed, 2));
      if (spec.problem == "partial") {
        Oracle oracle(g, cfg);
        const RunResult res = alternate_random_and_jump(oracle, alg_rng, spec.rho);
        values.push_back(static_cast<double>(res.set_size));
      } else {
        const NodeId seed_node = static_cast<NodeId>(alg_rng.uniform_int(1, n));
        Oracle oracle(g, cfg, seed_node);
        if (spec.problem == "mds") {
          const RunResult res = alternate_random(oracle, alg_rng);
          values.push_back(static_cast<double>(res.set_size));
          if (static_cast<double>(res.set_size) > tail_threshold) ++tail_hits;
        } else {
          const RunResult res = neighbor_collect(oracle, alg_rng, spec.c);
          values.push_back(res.f_value);
        }
      }
    }
    const double alg_value = mean_of(values);
    const double ratio = exact_value > 0 ? alg_value / exact_value : alg_value;
    std::vector<std::string> row{format_number(static_cast<long long>(inst)),
                                 format_number(static_cast<long long>(n)),
                                 format_number(alg_value),
                                 format_number(exact_value),
                                 format_number(ratio),
                                 format_number(bound),
                                 alg_value <= bound ? "1" : "0"};
    if (mds) {
      const double freq = static_cast<double>(tail_hits) / spec.trials;
      const double p = std::exp(-exact_value);
      const double tail_cap =
          p + 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(spec.trials));
      out.tail_freq.push_back(freq);
      out.tail_bound.push_back(tail_cap);
      row.push_back(format_number(freq));
      row.push_back(format_number(tail_cap));
    }
    t.add_row(std::move(row));
  }
  return out;
}

struct LowerboundOutcome {
  Table table;
  std::vector<std::pair<double, double>> medians_local;  // (n, median local queries)
  double slope = 0.0;
};

// Query growth of the natural local strategy on a lower-bound family versus
// its better-informed comparator: BFS path length on broken_paths, the
// coverage-aware domination algorithm on clique_pendant, and the planted
// optimum size on two_stars_paths.
inline LowerboundOutcome run_lowerbound_demo(const ExperimentSpec& spec) {
  std::string family = spec.graph_source;
  const std::string prefix = "family:";
  if (family.rfind(prefix, 0) == 0) family = family.substr(prefix.size());
  if (spec.n_values.empty()) throw SpecError("lowerbound: n values required");

  LowerboundOutcome out;
  Table& t = out.table;
  t.header = {"family", "n", "trial", "local_queries", "baseline_queries", "ratio"};
  for (std::size_t cell = 0; cell < spec.n_values.size(); ++cell) {
    const int n = static_cast<int>(spec.n_values[cell]);
    std::vector<double> local_q, base_q, ratios;
    for (int trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t trial_seed =
          derive_seed(spec.master_seed, stream_index(cell, static_cast<std::uint64_t>(trial)));
      const FamilyInstance inst = make_family(family, n, spec.r, spec.k,
                                              derive_seed(trial_seed, 1));
      double lq = 0.0, bq = 0.0;
      Rng alg_rng(derive_seed(trial_seed, 2));
      OracleConfig cfg;
      cfg.seed = derive_seed(trial_seed, 3);

      if (family == "broken_paths") {
        const NodeId s = inst.special_nodes.at("s");
        const NodeId tt = inst.special_nodes.at("t");
        Oracle oracle(inst.graph, cfg, s);
        const RunResult res =
            local_st_explore(oracle, alg_rng, oracle.label_of_index(tt),
                             BudgetPolicy{static_cast<long long>(inst.graph.node_count()),
                                          BudgetPolicy::StopRule::budget_exhausted, 1.0});
        lq = static_cast<double>(res.queries.query_count());
        const auto path = bfs_shortest_path(inst.graph, s, tt);
        bq = path ? static_cast<double>(path->size() - 1) : 0.0;
      } else if (family == "clique_pendant") {
        const NodeId start =
            static_cast<NodeId>(alg_rng.uniform_int(1, inst.graph.node_count()));
        OracleConfig open_cfg = cfg;
        open_cfg.mode = ViewMode::open;
        Oracle weak(inst.graph, open_cfg, start);
        Rng weak_rng = alg_rng.split(1);
        const RunResult weak_res = greedy_degree_only(weak, weak_rng);
        lq = static_cast<double>(weak_res.queries.query_count());
        OracleConfig closed_cfg = cfg;
        closed_cfg.mode = ViewMode::closed;
        closed_cfg.seed = derive_seed(cfg.seed, 5);
        Oracle strong(inst.graph, closed_cfg, start);
        Rng strong_rng = alg_rng.split(2);
        const RunResult strong_res = alternate_random(strong, strong_rng);
        bq = static_cast<double>(strong_res.queries.query_count());
      } else if (family == "two_stars_paths") {
        OracleConfig closed_cfg = cfg;
        closed_cfg.mode = ViewMode::closed;
        Oracle oracle(inst.graph, closed_cfg);
        const RunResult res = alternate_random_and_jump(oracle, alg_rng, spec.rho);
        lq = static_cast<double>(res.queries.query_count());
        bq = static_cast<double>(inst.planted_opt.size());
      } else {
        throw SpecError("lowerbound: unsupported family " + family);
      }
      const double ratio = bq > 0 ? lq / bq : lq;
      local_q.push_back(lq);
      base_q.push_back(bq);
      ratios.push_back(ratio);
      t.add_row({family, format_number(static_cast<long long>(n)),
                 format_number(static_cast<long long>(trial)), format_number(lq),
                 format_number(bq), format_number(ratio)});
    }
    out.medians_local.emplace_back(static_cast<double>(n), median_of(local_q));
    t.add_row({family, format_number(static_cast<long long>(n)), "summary",
               format_number(median_of(local_q)), format_number(median_of(base_q)),
               format_number(median_of(ratios))});
  }
  if (out.medians_local.size() >= 2) {
    out.slope = loglog_slope(out.medians_local);
    t.add_row({family, "slope", "", format_number(out.slope), "", ""});
  }
  return out;
}

// Structural diagnostics over repeated generator runs. Long format:
// n,m,trial,metric,value,detail.
inline Table run_diagnostics_experiment(const ExperimentSpec& spec) {
  if (spec.n_values.empty()) throw SpecError("diagnostics: n values required");
  Table t;
  t.header = {"n", "m", "trial", "metric", "value", "detail"};
  for (std::size_t cell = 0; cell < spec.n_values.size(); ++cell) {
    const int n = static_cast<int>(spec.n_values[cell]);
    const DiagnosticsParams d = DiagnosticsParams::for_n(n);
    for (int trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t trial_seed =
          derive_seed(spec.master_seed, stream_index(cell, static_cast<std::uint64_t>(trial)));
      auto [graph, weights] =
          detail::generate_pa(spec.graph_source, n, spec.m, derive_seed(trial_seed, 1));
      const DiagnosticsReport rep =
          degree_diagnostics(graph, spec.m, weights ? &*weights : nullptr, d);
      const std::string nn = format_number(static_cast<long long>(n));
      const std::string mm = format_number(static_cast<long long>(spec.m));
      const std::string tr = format_number(static_cast<long long>(trial));
      for (const auto& e : rep.events) {
        t.add_row({nn, mm, tr, "event:" + e.name, to_string(e.status),
                   format_number(static_cast<long long>(e.worst_index))});
      }
      t.add_row({nn, mm, tr, "loops", format_number(rep.loop_count), ""});
      t.add_row({nn, mm, tr, "root_degree",
                 format_number(static_cast<long long>(rep.root_degree)), ""});
      t.add_row({nn, mm, tr, "max_degree",
                 format_number(static_cast<long long>(rep.max_degree_value)), ""});
    }
  }
  return t;
}

}  // namespace netlocal
