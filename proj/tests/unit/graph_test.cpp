#include <gtest/gtest.h>

#include "generators.hpp"
#include "oddcut/error.hpp"
#include "oddcut/graph.hpp"
#include "oracles.hpp"

namespace oddcut {
namespace {

using testing::Rng;

Dag chain(std::initializer_list<std::pair<int, int>> pairs, int n) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1, 1});
  return Dag(n, std::move(edges));
}

TEST(BuildDag, SingleEdgeHasForwardOrder) {
  Dag d = chain({{0, 1}}, 2);
  EXPECT_EQ(d.topo_order(), (std::vector<NodeId>{0, 1}));
}

TEST(BuildDag, RejectsTriangleCycle) {
  try {
    chain({{0, 1}, {1, 2}, {2, 0}}, 3);
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CycleDetected);
  }
}

TEST(BuildDag, RejectsBadIdAndSelfLoop) {
  try {
    chain({{0, 5}}, 2);
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadNodeId);
  }
  EXPECT_THROW(chain({{1, 1}}, 2), OddcutError);
}

TEST(BuildDag, EmptyGraph) {
  Dag d(0, {});
  EXPECT_EQ(d.node_count(), 0);
  EXPECT_TRUE(d.topo_order().empty());
}

TEST(BuildDag, SmallestIdFirstTieBreak) {
  Dag d = chain({{2, 0}, {3, 1}}, 4);
  EXPECT_EQ(d.topo_order(), (std::vector<NodeId>{2, 0, 3, 1}));
}

TEST(DoubleCover, OneEdge) {
  Dag c = double_cover(chain({{0, 1}}, 2));
  EXPECT_EQ(c.node_count(), 4);
  EXPECT_TRUE(c.has_edge(left_copy(0), right_copy(1)));
  EXPECT_TRUE(c.has_edge(right_copy(0), left_copy(1)));
  EXPECT_EQ(c.edge_count(), 2);
}

TEST(DoubleCover, PathThroughMiddle) {
  Dag c = double_cover(chain({{0, 1}, {1, 2}}, 3));
  EXPECT_TRUE(c.has_edge(left_copy(0), right_copy(1)));
  EXPECT_TRUE(c.has_edge(right_copy(0), left_copy(1)));
  EXPECT_TRUE(c.has_edge(left_copy(1), right_copy(2)));
  EXPECT_TRUE(c.has_edge(right_copy(1), left_copy(2)));
}

TEST(DoubleCover, CopiesCostAndIsBipartite) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Dag d = testing::random_dag(rng, 7, 0.4);
    Dag c = double_cover(d);
    EXPECT_EQ(c.edge_count(), 2 * d.edge_count());
    for (const Edge& e : c.edges()) EXPECT_NE(e.tail % 2, e.head % 2);
  }
  Dag weighted(2, {{0, 1, Rational(3, 2), 2}});
  Dag c = double_cover(weighted);
  EXPECT_EQ(c.edge(0).cost, Rational(3, 2));
  EXPECT_EQ(c.edge(1).multiplicity, 2);
  EXPECT_EQ(double_cover(Dag(0, {})).node_count(), 0);
}

TEST(OddPath, Basics) {
  EXPECT_TRUE(has_odd_path(chain({{0, 1}}, 2), 0, 1));
  EXPECT_FALSE(has_odd_path(chain({{0, 1}, {1, 2}}, 3), 0, 2));
  try {
    has_odd_path(chain({{0, 1}}, 2), 1, 1);
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameNode);
  }
}

TEST(OddPath, AllForwardDagsOnFiveNodes) {
  for (const Dag& d : testing::all_forward_dags(5)) {
    for (int s = 0; s < 5; ++s) {
      for (int t = 0; t < 5; ++t) {
        if (s == t) continue;
        ASSERT_EQ(has_odd_path(d, s, t), testing::odd_path_exists(d, s, t));
      }
    }
  }
}

TEST(OddPath, RandomDagsUpToTen) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Dag d = testing::random_dag(rng, n, 0.35);
    const int s = static_cast<int>(rng() % n);
    const int t = (s + 1 + static_cast<int>(rng() % (n - 1))) % n;
    ASSERT_EQ(has_odd_path(d, s, t), testing::odd_path_exists(d, s, t));
  }
}

TEST(ParityReach, Examples) {
  const NodeSet src{0};
  auto r = parity_reach(chain({{0, 1}}, 2), src);
  EXPECT_TRUE(r[0].even);
  EXPECT_TRUE(r[1].odd);
  EXPECT_FALSE(r[1].even);
  r = parity_reach(chain({{0, 1}, {1, 2}}, 3), src);
  EXPECT_TRUE(r[1].odd);
  EXPECT_TRUE(r[2].even);
  EXPECT_FALSE(r[2].odd);
}

TEST(ParityReach, MatchesEnumerationAndOddPath) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Dag d = testing::random_dag(rng, n, 0.35);
    const auto adj = testing::adjacency(d);
    const NodeId s = static_cast<NodeId>(rng() % n);
    const NodeSet src{s};
    const auto r = parity_reach(d, src);
    for (int v = 0; v < n; ++v) {
      if (v == s) {
        EXPECT_TRUE(r[v].even);
        continue;
      }
      const auto parities = testing::path_parities(adj, s, v);
      ASSERT_EQ(r[v].even, parities.count(0) > 0);
      ASSERT_EQ(r[v].odd, parities.count(1) > 0);
      ASSERT_EQ(r[v].odd, has_odd_path(d, s, v));
    }
  }
}

TEST(Reach, Examples) {
  Dag d = chain({{0, 1}}, 2);
  EXPECT_TRUE(reachable_from(d, NodeSet{}).empty());
  EXPECT_EQ(reachable_from(d, NodeSet{0}), (NodeSet{0, 1}));
}

TEST(Reach, MatchesClosureAndIsMonotone) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Dag d = testing::random_dag(rng, n, 0.3);
    NodeSet all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    const NodeSet y = testing::random_subset(rng, all);
    const NodeSet x = testing::random_subset(rng, y);
    const NodeSet rx = reachable_from(d, x);
    const NodeSet ry = reachable_from(d, y);
    ASSERT_EQ(rx, testing::closure(testing::adjacency(d), x));
    ASSERT_TRUE(std::includes(ry.begin(), ry.end(), rx.begin(), rx.end()));
  }
}

TEST(TPaths, StarAndChain) {
  auto p = enumerate_t_paths(chain({{0, 1}}, 2), NodeSet{0, 1});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p[0].odd());
  p = enumerate_t_paths(chain({{0, 1}, {1, 2}}, 3), NodeSet{0, 1, 2});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].nodes, (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(p[1].nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(p[2].nodes, (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(enumerate_t_paths(chain({{0, 1}, {1, 2}}, 3), NodeSet{0, 1, 2},
                              ParityFilter::OddOnly)
                .size(),
            2u);
}

TEST(TPaths, CapIsEnforced) {
  std::vector<Edge> edges;
  const int n = 12;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1, 1});
  }
  Dag complete(n, std::move(edges));
  try {
    enumerate_t_paths(complete, NodeSet{0, n - 1}, ParityFilter::Any, 100);
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExplosionCap);
  }
}

TEST(TPaths, UndirectedReportedOnce) {
  UndirGraph g(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 1, 1}});
  auto p = enumerate_t_paths(g, NodeSet{0, 2});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(p[1].nodes, (std::vector<NodeId>{0, 2}));
  EXPECT_TRUE(has_odd_t_path(g, NodeSet{0, 2}));
  EXPECT_FALSE(has_odd_t_path(UndirGraph(3, {{0, 1, 1, 1}, {1, 2, 1, 1}}), NodeSet{0, 2}));
}

TEST(TPaths, OddPathExistsIffEnumerationFindsOne) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Dag d = testing::random_dag(rng, n, 0.4);
    NodeSet all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    NodeSet t = testing::random_subset(rng, all, 0.4);
    bool any = false;
    for (NodeId a : t) {
      const NodeSet src{a};
      const auto r = parity_reach(d, src);
      for (NodeId b : t) any = any || (b != a && r[b].odd);
    }
    ASSERT_EQ(any, !enumerate_t_paths(d, t, ParityFilter::OddOnly).empty());
  }
}

TEST(TwoColoring, DetectsOddCycle) {
  EXPECT_FALSE(two_coloring(UndirGraph(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 1, 1}})));
  EXPECT_TRUE(two_coloring(UndirGraph(0, {})));
  Mask gone{0, 0, 1};
  auto c = two_coloring(UndirGraph(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 1, 1}}), {&gone});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[2], -1);
  EXPECT_NE((*c)[0], (*c)[1]);
}

TEST(UndirGraph, RejectsSelfLoop) {
  try {
    UndirGraph(2, {{1, 1, 1, 1}});
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SelfLoop);
  }
}

}  // namespace
}  // namespace oddcut
