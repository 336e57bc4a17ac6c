#include "netlocal/pa.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "netlocal/graph_io.hpp"
#include "test_support.hpp"

namespace netlocal {
namespace {

TEST(SequentialPa, SingleNodeCarriesAllSelfLoops) {
  const auto [g, parents] = generate_sequential({1, 3, 42});
  EXPECT_EQ(g.node_count(), 1);
  EXPECT_EQ(g.loop_count(1), 3);
  EXPECT_EQ(g.degree(1), 6);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(parents.parent(1, k), 1);
}

TEST(SequentialPa, DegreeSumIsExactly2mn) {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto [g, parents] = generate_sequential({500, 3, seed});
    long long sum = 0;
    for (NodeId v = 1; v <= g.node_count(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2LL * 3 * 500);
    EXPECT_EQ(g.edge_count(), 3LL * 500);
  }
}

TEST(SequentialPa, ParentsNeverExceedOwnIndex) {
  const auto [g, parents] = generate_sequential({300, 2, 7});
  for (int t = 1; t <= 300; ++t)
    for (int k = 1; k <= 2; ++k) EXPECT_LE(parents.parent(t, k), t);
}

// Degree of t = its m outgoing edges plus appearances as a parent of others
// (a self-parent shows up in both terms, which is exactly the loop's 2).
TEST(BothGenerators, DegreeDecomposesIntoOutEdgesPlusParentHits) {
  const auto [gs, ps] = generate_sequential({200, 2, 11});
  const auto wr = generate_weighted({200, 2, 13});
  for (const auto& [g, parents] :
       {std::pair<const Graph&, const ParentRecord&>{gs, ps},
        std::pair<const Graph&, const ParentRecord&>{wr.graph, wr.parents}}) {
    std::vector<int> hits(201, 0);
    for (int t = 1; t <= 200; ++t)
      for (int k = 1; k <= 2; ++k) ++hits[parents.parent(t, k)];
    for (NodeId v = 1; v <= 200; ++v) EXPECT_EQ(g.degree(v), 2 + hits[v]) << v;
  }
}

TEST(SequentialPa, MinDegreeFractionIsStableAcrossSeedBatches) {
  const int n = 10000, m = 2, seeds = 100;
  std::vector<double> fraction;
  for (int s = 0; s < seeds; ++s) {
    const auto [g, parents] = generate_sequential({n, m, derive_seed(505, s)});
    int cnt = 0;
    for (NodeId v = 1; v <= n; ++v)
      if (g.degree(v) == m) ++cnt;
    fraction.push_back(static_cast<double>(cnt) / n);
  }
  std::vector<double> first(fraction.begin(), fraction.begin() + seeds / 2);
  std::vector<double> second(fraction.begin() + seeds / 2, fraction.end());
  const double diff = std::abs(mean_of(first) - mean_of(second));
  const double se = std::sqrt(standard_error(first) * standard_error(first) +
                              standard_error(second) * standard_error(second));
  EXPECT_LE(diff, 3.0 * se + 1e-12);
}

TEST(WeightedPa, PrefixSumIdentityHolds) {
  const auto res = generate_weighted({400, 2, 99});
  const WeightSequence& ws = res.weights;
  ASSERT_EQ(ws.size(), 400);
  double sum = 0.0;
  for (int i = 1; i <= ws.size(); ++i) {
    sum += ws.w(i);
    EXPECT_GT(ws.W(i), ws.W(i - 1));
  }
  EXPECT_NEAR(sum, ws.W(400), 1e-9);
  EXPECT_LE(ws.W(400), 1.0);
}

TEST(WeightedPa, ParentDrawMatchesInjectedWeights) {
  WeightSequence ws;
  ws.prefix = {0.0, 0.5, 0.8, 1.0};  // w = (0.5, 0.3, 0.2)
  Rng rng(2718);
  const int trials = 100000;
  int first = 0;
  for (int i = 0; i < trials; ++i)
    if (draw_parent(ws, 3, rng) == 1) ++first;
  EXPECT_NEAR(static_cast<double>(first) / trials, 0.5, 0.01);
}

TEST(WeightedPa, ParentDrawRespectsPrefixTruncation) {
  WeightSequence ws;
  ws.prefix = {0.0, 0.5, 0.8, 1.0};
  Rng rng(31337);
  for (int i = 0; i < 2000; ++i) {
    EXPECT_LE(draw_parent(ws, 2, rng), 2);
    EXPECT_EQ(draw_parent(ws, 1, rng), 1);
  }
}

TEST(WeightedPa, SameSeedIsBitReproducible) {
  const auto a = generate_weighted({300, 2, 404});
  const auto b = generate_weighted({300, 2, 404});
  EXPECT_TRUE(a.graph == b.graph);
  EXPECT_EQ(a.weights.prefix, b.weights.prefix);
  const auto c = generate_weighted({300, 2, 405});
  EXPECT_FALSE(a.graph == c.graph);
}

TEST(ClassifyTypical, ThresholdAndEarlyNodeRules) {
  const int n = 100000;
  const DiagnosticsParams d = DiagnosticsParams::for_n(n);
  ASSERT_GT(d.s0, 1.0);
  const int early = static_cast<int>(d.s0) - 1;
  const int late = static_cast<int>(d.s0) + 5000;
  WeightSequence ws;
  ws.prefix.assign(n + 1, 0.0);
  auto set_weight = [&](int i, double w) {
    for (int j = i; j <= n; ++j) ws.prefix[j] = ws.prefix[i - 1] + w;
  };

  set_weight(early, 1e-12);
  EXPECT_TRUE(classify_typical(ws, early, d));  // early index passes regardless

  set_weight(late, 1.0 / std::sqrt(static_cast<double>(late) * n));
  EXPECT_TRUE(classify_typical(ws, late, d));  // 1/sqrt(in) >= 1/(30 sqrt(in))

  set_weight(late, 1.0 / (60.0 * std::sqrt(static_cast<double>(late) * n)));
  EXPECT_FALSE(classify_typical(ws, late, d));
}

TEST(Diagnostics, EdgelessGraphFailsRootHeavyAtIndexOne) {
  const Graph g = testing::edgeless_graph(64);
  const DiagnosticsParams d = DiagnosticsParams::for_n(64);
  const DiagnosticsReport rep = degree_diagnostics(g, 2, nullptr, d);
  const DiagnosticEvent& root = rep.event("root_heavy");
  EXPECT_EQ(root.status, EventStatus::failed);
  EXPECT_EQ(root.worst_index, 1);
}

TEST(Diagnostics, TinyGraphReportsNotApplicable) {
  const auto [g, parents] = generate_sequential({8, 2, 5});
  const DiagnosticsParams d = DiagnosticsParams::for_n(8);
  const DiagnosticsReport rep = degree_diagnostics(g, 2, nullptr, d);
  EXPECT_EQ(rep.event("old_nodes_light").status, EventStatus::not_applicable);
  EXPECT_EQ(rep.event("early_nodes_heavy").status, EventStatus::not_applicable);
}

TEST(Diagnostics, WeightTrackingEventFlagsSyntheticDeviation) {
  const int n = 100000;
  const DiagnosticsParams d = DiagnosticsParams::for_n(n);
  WeightSequence ws;
  ws.prefix.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    ws.prefix[i] = std::sqrt(static_cast<double>(i) / n);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 2; v <= n; ++v) edges.emplace_back(v, 1);  // any graph works here
  const Graph g(n, edges);

  DiagnosticsReport rep = degree_diagnostics(g, 2, &ws, d);
  EXPECT_EQ(rep.event("weights_track_sqrt").status, EventStatus::passed);

  const int bad = static_cast<int>(d.s0) + 1000;
  ws.prefix[bad] *= 1.05;  // 5% off; tolerance is 1%
  rep = degree_diagnostics(g, 2, &ws, d);
  EXPECT_EQ(rep.event("weights_track_sqrt").status, EventStatus::failed);
  EXPECT_EQ(rep.event("weights_track_sqrt").worst_index, bad);
}

TEST(Diagnostics, ReportsLoopCount) {
  const auto res = generate_weighted({2000, 2, 17});
  const DiagnosticsReport rep =
      degree_diagnostics(res.graph, 2, &res.weights, DiagnosticsParams::for_n(2000));
  EXPECT_EQ(rep.loop_count, res.graph.total_loops());
  EXPECT_GE(rep.loop_count, 2);  // node 1 always self-loops
}

TEST(WeightSidecar, RoundTripsExactly) {
  const auto res = generate_weighted({50, 2, 23});
  std::ostringstream os;
  write_weight_sequence(res.weights, os);
  std::istringstream is(os.str());
  const WeightSequence back = parse_weight_sequence(is);
  ASSERT_EQ(back.size(), res.weights.size());
  for (int i = 1; i <= back.size(); ++i)
    EXPECT_DOUBLE_EQ(back.W(i), res.weights.W(i));
}

}  // namespace
}  // namespace netlocal
