// netlocal: generate graphs, run local-information algorithms against the
// visibility oracle, and drive the experiment harness.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netlocal/algorithms.hpp"
#include "netlocal/baselines.hpp"
#include "netlocal/experiments.hpp"
#include "netlocal/families.hpp"
#include "netlocal/graph_io.hpp"
#include "netlocal/oracle.hpp"
#include "netlocal/pa.hpp"

namespace {

using namespace netlocal;

struct GenerateOptions {
  std::string model = "ba";
  int n = 1000;
  int m = 2;
  int k = 1;
  int r = 1;
  double c = 2.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateOptions& opt) {
  if (opt.model == "ba") {
    const auto [g, parents] = generate_sequential({opt.n, opt.m, opt.seed});
    save_graph(g, opt.out);
  } else if (opt.model == "br") {
    const auto res = generate_weighted({opt.n, opt.m, opt.seed});
    save_graph(res.graph, opt.out);
    save_weight_sequence(res.weights, opt.out + ".weights");
  } else if (opt.model.rfind("family:", 0) == 0) {
    const std::string name = opt.model.substr(7);
    const FamilyInstance inst = make_family(name, opt.n, opt.r, opt.k, opt.seed);
    save_graph(inst.graph, opt.out);
    nlohmann::json side = inst.sidecar();
    side["params"]["c"] = opt.c;
    std::ofstream os(opt.out + ".json", std::ios::binary);
    if (!os) throw IoError("cannot open for write: " + opt.out + ".json");
    os << side.dump(2) << '\n';
  } else {
    throw CLI::ValidationError("--model must be ba, br, or family:<name>");
  }
  return 0;
}

struct RunOptions {
  std::string alg;
  std::string graph_path;
  std::uint64_t seed = 0;
  double rho = 0.5;
  double c = 2.0;
  int k = 1;
  long long budget = 0;
  std::optional<int> seed_node;
  std::optional<int> s_node;
  std::optional<int> t_node;
  std::string out;
  std::string log_path;
};

int run_algorithm(const RunOptions& opt) {
  const Graph g = load_graph(opt.graph_path);
  const int n = g.node_count();
  Rng pick(derive_seed(opt.seed, 0xbeef));
  const NodeId seed_node =
      opt.seed_node ? *opt.seed_node : static_cast<NodeId>(pick.uniform_int(1, n));
  g.check_node(seed_node);
  const long long budget =
      opt.budget > 0 ? opt.budget : std::min<long long>(n, 1000000);
  Rng alg_rng(derive_seed(opt.seed, 0xa19));

  OracleConfig cfg;
  cfg.seed = derive_seed(opt.seed, 0x0c1e);

  RunResult result;
  const Oracle* oracle_for_log = nullptr;
  std::optional<Oracle> oracle;

  if (opt.alg == "traverse" || opt.alg == "topk" || opt.alg == "gainpercost") {
    oracle.emplace(g, cfg, seed_node);
    if (opt.alg == "traverse")
      result = traverse_to_root(*oracle, alg_rng, BudgetPolicy::root_search(budget));
    else if (opt.alg == "topk")
      result = top_k_degrees(*oracle, alg_rng, opt.k, BudgetPolicy::root_search(budget));
    else
      result = gain_per_cost_run(*oracle, alg_rng, BudgetPolicy::root_search(budget));
    oracle_for_log = &*oracle;
  } else if (opt.alg == "stconnect") {
    const NodeId s = opt.s_node ? *opt.s_node : static_cast<NodeId>(pick.uniform_int(1, n));
    const NodeId t = opt.t_node ? *opt.t_node : static_cast<NodeId>(pick.uniform_int(1, n));
    const StConnectResult res =
        st_connect(g, s, t, cfg, alg_rng, BudgetPolicy::root_search(budget));
    result = res.combined;
  } else if (opt.alg == "altrandom" || opt.alg == "neighborcollect") {
    cfg.mode = ViewMode::closed;
    oracle.emplace(g, cfg, seed_node);
    const BudgetPolicy policy =
        opt.budget > 0 ? BudgetPolicy::dominate(opt.budget) : BudgetPolicy::dominate();
    result = opt.alg == "altrandom" ? alternate_random(*oracle, alg_rng, policy)
                                    : neighbor_collect(*oracle, alg_rng, opt.c, policy);
    oracle_for_log = &*oracle;
  } else if (opt.alg == "altjump") {
    cfg.mode = ViewMode::closed;
    oracle.emplace(g, cfg);
    const BudgetPolicy policy =
        opt.budget > 0 ? BudgetPolicy::cover(opt.rho, opt.budget) : BudgetPolicy::cover(opt.rho);
    result = alternate_random_and_jump(*oracle, alg_rng, opt.rho, policy);
    oracle_for_log = &*oracle;
  } else {
    throw CLI::ValidationError("unknown --alg " + opt.alg);
  }

  result.seed = opt.seed;
  nlohmann::json j = result.to_json();
  j["status"] = result.status;
  j["success"] = result.success;
  if (!result.ranked_by_degree.empty()) {
    nlohmann::json ranked = nlohmann::json::array();
    for (const auto& [lab, deg] : result.ranked_by_degree)
      ranked.push_back({{"label", lab}, {"degree", deg}});
    j["ranked_by_degree"] = ranked;
  }
  if (result.algorithm == "gainpercost") {
    j["best_prefix_ratio"] = result.best_prefix_ratio;
    j["best_singleton_gain"] = result.best_singleton_gain;
  }

  if (opt.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream os(opt.out, std::ios::binary);
    if (!os) throw IoError("cannot open for write: " + opt.out);
    os << j.dump(2) << '\n';
  }
  if (!opt.log_path.empty() && oracle_for_log != nullptr) {
    std::ofstream os(opt.log_path, std::ios::binary);
    if (!os) throw IoError("cannot open for write: " + opt.log_path);
    oracle_for_log->log().write_jsonl(os);
  }
  return 0;
}

int run_experiment(const std::string& kind, const std::string& spec_path,
                   const std::string& out_dir) {
  ExperimentSpec spec = ExperimentSpec::parse_file(spec_path);
  if (spec.kind != kind)
    throw SpecError("spec kind '" + spec.kind + "' does not match subcommand '" + kind + "'");
  std::filesystem::create_directories(out_dir);
  const std::string base = spec.out.empty() ? kind + ".csv" : spec.out;
  const std::string path = out_dir + "/" + base;
  if (kind == "scaling") {
    emit_results(run_scaling_experiment(spec), path, EmitFormat::csv);
  } else if (kind == "approx") {
    emit_results(run_approximation_experiment(spec).table, path, EmitFormat::csv);
  } else if (kind == "lowerbound") {
    emit_results(run_lowerbound_demo(spec).table, path, EmitFormat::csv);
  } else if (kind == "diagnostics") {
    emit_results(run_diagnostics_experiment(spec), path, EmitFormat::csv);
  } else {
    throw SpecError("unknown experiment kind: " + kind);
  }
  std::cout << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-information graph algorithm simulator"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "generate a graph file");
  cmd_gen->add_option("--model", gen.model, "ba | br | family:<name>");
  cmd_gen->add_option("--n", gen.n, "node count")->required();
  cmd_gen->add_option("--m", gen.m, "edges per node");
  cmd_gen->add_option("--k", gen.k, "family parameter k");
  cmd_gen->add_option("--r", gen.r, "family parameter r");
  cmd_gen->add_option("--c", gen.c, "cost parameter recorded in the sidecar");
  cmd_gen->add_option("--seed", gen.seed, "generator seed");
  cmd_gen->add_option("--out", gen.out, "output path")->required();

  RunOptions run;
  CLI::App* cmd_run = app.add_subcommand("run", "run one algorithm on a graph file");
  cmd_run
      ->add_option("--alg", run.alg,
                   "traverse | stconnect | topk | gainpercost | altrandom | altjump | "
                   "neighborcollect")
      ->required();
  cmd_run->add_option("--graph", run.graph_path, "graph file")->required();
  cmd_run->add_option("--seed", run.seed, "run seed");
  cmd_run->add_option("--rho", run.rho, "coverage fraction for altjump");
  cmd_run->add_option("--c", run.c, "cost for neighborcollect");
  cmd_run->add_option("--k", run.k, "k for topk");
  cmd_run->add_option("--budget", run.budget, "max queries (0 = default)");
  int seed_node = 0, s_node = 0, t_node = 0;
  auto* opt_seed_node =
      cmd_run->add_option("--seed-node", seed_node, "start node (default: random)");
  auto* opt_s = cmd_run->add_option("--s", s_node, "s endpoint for stconnect");
  auto* opt_t = cmd_run->add_option("--t", t_node, "t endpoint for stconnect");
  cmd_run->add_option("--out", run.out, "result JSON path (default: stdout)");
  cmd_run->add_option("--log", run.log_path, "query log JSONL path");

  std::string exp_kind, spec_path, out_dir = ".";
  CLI::App* cmd_exp = app.add_subcommand("experiment", "run an experiment from a spec file");
  cmd_exp->add_option("kind", exp_kind, "scaling | approx | lowerbound | diagnostics")
      ->required();
  cmd_exp->add_option("--spec", spec_path, "key=value spec file")->required();
  cmd_exp->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_gen) return run_generate(gen);
    if (*cmd_run) {
      if (*opt_seed_node) run.seed_node = seed_node;
      if (*opt_s) run.s_node = s_node;
      if (*opt_t) run.t_node = t_node;
      return run_algorithm(run);
    }
    if (*cmd_exp) return run_experiment(exp_kind, spec_path, out_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
