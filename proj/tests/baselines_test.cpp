#include "netlocal/baselines.hpp"

#include <gtest/gtest.h>

#include "netlocal/experiments.hpp"
#include "netlocal/families.hpp"
#include "test_support.hpp"

namespace netlocal {
namespace {

TEST(BruteForceMds, StarNeedsOnlyTheHub) {
  const ExactSolution sol = brute_force_mds(testing::star_graph(4));
  EXPECT_EQ(sol.optimum_value, 1);
  EXPECT_EQ(sol.optimum_set.sorted(), std::vector<NodeId>{1});
}

TEST(BruteForceMds, PathOfFourNeedsTwo) {
  EXPECT_EQ(brute_force_mds(testing::path_graph(4)).optimum_value, 2);
}

TEST(BruteForceMds, SixCycleNeedsTwo) {
  EXPECT_EQ(brute_force_mds(testing::cycle_graph(6)).optimum_value, 2);
}

TEST(BruteForceMds, RefusesOverCap) {
  EXPECT_THROW(brute_force_mds(testing::path_graph(30)), SolverCapExceeded);
  EXPECT_NO_THROW(brute_force_mds(testing::path_graph(30), 30));
}

TEST(BruteForceMds, AgreesWithFullEnumeration) {
  Rng rng(2023);
  for (int inst = 0; inst < 40; ++inst) {
    const int n = static_cast<int>(rng.uniform_int(2, 12));
    const Graph g = erdos_renyi(n, 0.3, rng);
    EXPECT_EQ(brute_force_mds(g).optimum_value, testing::mds_size_by_full_enumeration(g))
        << "instance " << inst;
  }
}

TEST(BruteForcePartial, SingleNodeCoversTargetOne) {
  EXPECT_EQ(brute_force_partial_cover(testing::path_graph(6), 1).optimum_value, 1);
}

TEST(BruteForcePartial, BigStarCoversEverythingWithOneNode) {
  EXPECT_EQ(brute_force_partial_cover(testing::star_graph(9), 10).optimum_value, 1);
}

TEST(BruteForcePartial, TwoTrianglesNeedTwoForFour) {
  EXPECT_EQ(brute_force_partial_cover(testing::two_triangles(), 4).optimum_value, 2);
}

TEST(BruteForcePartial, InfeasibleTargetThrows) {
  EXPECT_THROW(brute_force_partial_cover(testing::path_graph(4), 5), GraphError);
}

TEST(BruteForceNeighborCollect, CheapCoverageReducesToDomination) {
  const ExactSolution sol = brute_force_neighbor_collect(testing::star_graph(4), 0.5);
  EXPECT_DOUBLE_EQ(sol.optimum_value, 0.5);
  EXPECT_EQ(sol.optimum_set.sorted(), std::vector<NodeId>{1});
}

TEST(BruteForceNeighborCollect, ExpensiveCoverageLeavesNodesBare) {
  const ExactSolution sol = brute_force_neighbor_collect(testing::edgeless_graph(3), 2.0);
  EXPECT_DOUBLE_EQ(sol.optimum_value, 3.0);
  EXPECT_EQ(sol.optimum_set.size(), 0u);
}

TEST(BruteForceNeighborCollect, CheapCoverageTakesAllIsolatedNodes) {
  const ExactSolution sol = brute_force_neighbor_collect(testing::edgeless_graph(3), 0.5);
  EXPECT_DOUBLE_EQ(sol.optimum_value, 1.5);
  EXPECT_EQ(sol.optimum_set.size(), 3u);
}

TEST(FullInfoGreedy, StarPicksTheHub) {
  const VertexSet s = full_info_greedy_mds(testing::star_graph(4));
  EXPECT_EQ(s.sorted(), std::vector<NodeId>{1});
}

TEST(FullInfoGreedy, AlwaysDominatesAndRespectsTheClassicBound) {
  Rng rng(7);
  for (int inst = 0; inst < 200; ++inst) {
    const int n = static_cast<int>(rng.uniform_int(2, 16));
    const Graph g = erdos_renyi(n, 0.3, rng);
    const VertexSet s = full_info_greedy_mds(g);
    EXPECT_TRUE(is_dominating(g, s));
    const double opt = brute_force_mds(g).optimum_value;
    const double cap = (1.0 + harmonic_number(max_degree(g).second)) * opt;
    EXPECT_LE(static_cast<double>(s.size()), cap + 1e-9) << "instance " << inst;
  }
}

TEST(BfsShortestPath, TrivialAndDisconnectedCases) {
  const Graph g = testing::two_triangles();
  EXPECT_EQ(bfs_shortest_path(g, 2, 2), std::vector<NodeId>{2});
  EXPECT_FALSE(bfs_shortest_path(g, 1, 5).has_value());
}

TEST(BfsShortestPath, PlantedPathHasSevenEdges) {
  const FamilyInstance inst = broken_paths(62, 1, 1, 3);
  const auto path =
      bfs_shortest_path(inst.graph, inst.special_nodes.at("s"), inst.special_nodes.at("t"));
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->size(), 8u);  // 7 edges: s, 6 interior nodes, t
}

TEST(ExactMaxDegree, MatchesGraphPrimitive) {
  for (const auto& named : testing::view_corpus()) {
    EXPECT_EQ(exact_max_degree(named.graph), max_degree(named.graph)) << named.name;
  }
}

TEST(ExactSolutions, ExploredCountsAreReported) {
  const ExactSolution sol = brute_force_mds(testing::path_graph(6));
  EXPECT_GT(sol.explored, 0);
  EXPECT_EQ(sol.method, "exhaustive");
}

}  // namespace
}  // namespace netlocal
