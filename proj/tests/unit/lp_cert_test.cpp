#include <gtest/gtest.h>

#include "generators.hpp"
#include "oddcut/error.hpp"
#include "oddcut/lp_cert.hpp"
#include "oddcut/reductions.hpp"
#include "oracles.hpp"

namespace oddcut {
namespace {

using testing::Rng;

Dag make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1, 1});
  return Dag(n, std::move(edges));
}

Rational path_weight(const Dag& d, const std::vector<int>& nodes, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (int v : path_variables(d, Path{nodes})) sum += x[v];
  return sum;
}

TEST(ShortestOddPath, Examples) {
  EXPECT_EQ(shortest_odd_path_weight(make(2, {{0, 1}}), 0, 1, {Rational(7)}), Rational(7));
  EXPECT_FALSE(shortest_odd_path_weight(make(3, {{0, 1}, {1, 2}}), 0, 2, {1, 1}));
}

TEST(ShortestOddPath, MatchesEnumeration) {
  Rng rng(91);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Dag d = testing::random_dag(rng, n, 0.4);
    std::vector<Rational> w(d.edge_count());
    for (auto& v : w) v = Rational(static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 3));
    const int s = d.topo_order().front();
    const int t = d.topo_order().back();
    if (s == t) continue;
    std::optional<Rational> best;
    for (const auto& p : testing::all_paths(testing::adjacency(d), s, t)) {
      if (p.size() % 2 == 1) continue;
      const Rational sum = path_weight(d, p, w);
      if (!best || sum < *best) best = sum;
    }
    ASSERT_EQ(shortest_odd_path_weight(d, s, t, w), best);
  }
}

TEST(PrimalFeasible, Examples) {
  Dag d = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_TRUE(verify_primal_feasible(d, 0, 3, {{1, 1, 1, 1}}));
  EXPECT_FALSE(verify_primal_feasible(d, 0, 3, {{0, 0, 0, 0}}));
  EXPECT_TRUE(verify_primal_feasible(make(3, {{0, 1}, {1, 2}}), 0, 2, {{0, 0}}));
}

TEST(PrimalFeasible, StarWitness) {
  for (int k = 2; k <= 6; ++k) {
    StarGap g = gen_star_gap(k);
    EXPECT_TRUE(verify_primal_feasible(g.instance.undirected(), k + 1, k + 2, g.witness));
  }
}

TEST(PrimalFeasible, MatchesEnumerationOracle) {
  Rng rng(92);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    Dag d = testing::random_dag(rng, n, 0.4);
    PrimalSolution x{std::vector<Rational>(d.edge_count())};
    for (auto& v : x.x) v = Rational(static_cast<int>(rng() % 3), 2);
    const int s = d.topo_order().front();
    const int t = d.topo_order().back();
    bool ok = true;
    for (const auto& p : testing::all_paths(testing::adjacency(d), s, t)) {
      if (p.size() % 2 == 0 && path_weight(d, p, x.x) < 1) ok = false;
    }
    ASSERT_EQ(verify_primal_feasible(d, s, t, x), ok);
  }
}

TEST(DualFeasible, Examples) {
  Dag d = make(2, {{0, 1}});
  EXPECT_TRUE(verify_dual_feasible(d, 0, 1, {}));
  EXPECT_TRUE(verify_dual_feasible(d, 0, 1, {{{Path{{0, 1}}, Rational(1)}}}));
  EXPECT_FALSE(verify_dual_feasible(d, 0, 1, {{{Path{{0, 1}}, Rational(3, 2)}}}));
  Dag even = make(3, {{0, 1}, {1, 2}});
  try {
    verify_dual_feasible(even, 0, 2, {{{Path{{0, 1, 2}}, Rational(1)}}});
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOddPath);
  }
}

TEST(Optimality, GapAndEquality) {
  Dag d = make(2, {{0, 1}});
  OptimalityReport r = check_optimality(d, 0, 1, {{1}}, {{{Path{{0, 1}}, Rational(1, 2)}}});
  EXPECT_FALSE(r.optimal);
  EXPECT_EQ(r.gap, Rational(1, 2));
  r = check_optimality(d, 0, 1, {{1}}, {{{Path{{0, 1}}, Rational(1)}}});
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(r.gap, 0);
  EXPECT_THROW(check_optimality(d, 0, 1, {{0}}, {}), OddcutError);
}

TEST(Optimality, WeakDualityOnRandomPairs) {
  Rng rng(93);
  for (int i = 0; i < 150; ++i) {
    Dag d = testing::random_dag(rng, 6, 0.5);
    const int s = d.topo_order().front();
    const int t = d.topo_order().back();
    const auto odd = enumerate_paths(d, s, t);
    PrimalSolution x{std::vector<Rational>(d.edge_count(), 1)};
    DualFlow f;
    for (const Path& p : odd) {
      if (p.odd() && rng() % 2 == 0) f.flows.push_back({p, Rational(1, 1 + static_cast<int>(rng() % 6))});
    }
    if (!verify_dual_feasible(d, s, t, f)) continue;
    ASSERT_LE(dual_value(f), primal_objective(d, x));
  }
}

TEST(ExtremePoint, SingleEdge) {
  Dag d = make(2, {{0, 1}});
  EXPECT_TRUE(verify_extreme_point(d, 0, 1, {{1}}, {Path{{0, 1}}}));
  EXPECT_FALSE(verify_extreme_point(d, 0, 1, {{1}}, {}));
}

TEST(ExtremePoint, RejectsSlackPath) {
  Dag d = make(2, {{0, 1}});
  try {
    verify_extreme_point(d, 0, 1, {{2}}, {Path{{0, 1}}});
    FAIL();
  } catch (const OddcutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PathNotTight);
  }
}

TEST(ExtremePoint, EscherPrimalIsUniqueVertex) {
  EscherWall w = gen_escher_wall();
  const Dag& d = w.instance.dag();
  const auto& x = w.certificate.primal;
  ASSERT_TRUE(verify_extreme_point(d, w.s, w.t, x, w.certificate.tight_paths));
  auto rows = tight_rows(d, x, w.certificate.tight_paths);
  EXPECT_EQ(matrix_rank(rows), d.edge_count());
  // Dropping a tight path loses full rank.
  auto fewer = w.certificate.tight_paths;
  fewer.pop_back();
  EXPECT_FALSE(verify_extreme_point(d, w.s, w.t, x, fewer));
}

TEST(HalfIntegral, Examples) {
  EXPECT_TRUE(is_half_integral({{Rational(1, 2), Rational(1), Rational(0)}}));
  EXPECT_FALSE(is_half_integral({{Rational(1, 4)}}));
  EXPECT_FALSE(is_half_integral(gen_escher_wall().certificate.primal));
}

TEST(LinearAlgebra, RankAndSolve) {
  using Row = std::vector<Rational>;
  EXPECT_EQ(matrix_rank({Row{1, 2}, Row{2, 4}}), 1);
  EXPECT_EQ(matrix_rank({Row{1, 2}, Row{3, 4}}), 2);
  EXPECT_EQ(matrix_rank({}), 0);
  EXPECT_EQ(matrix_rank({Row{0, 0}, Row{Rational(1, 3), 0}, Row{0, Rational(2, 7)}}), 2);
  auto y = solve_square_system({Row{2, 1}, Row{1, 3}}, {3, 5});
  ASSERT_TRUE(y);
  EXPECT_EQ((*y)[0], Rational(4, 5));
  EXPECT_EQ((*y)[1], Rational(7, 5));
  EXPECT_FALSE(solve_square_system({Row{1, 2}, Row{2, 4}}, {1, 2}));
}

TEST(LinearAlgebra, RankMatchesRandomProducts) {
  Rng rng(94);
  for (int i = 0; i < 100; ++i) {
    const int r = 1 + static_cast<int>(rng() % 4);
    const int cols = r + static_cast<int>(rng() % 3);
    // Rows are combinations of r random basis vectors, so rank <= r.
    std::vector<std::vector<Rational>> basis(r, std::vector<Rational>(cols));
    for (auto& b : basis) {
      for (auto& v : b) v = static_cast<int>(rng() % 5) - 2;
    }
    std::vector<std::vector<Rational>> rows(r + 2, std::vector<Rational>(cols, 0));
    for (auto& row : rows) {
      for (const auto& b : basis) {
        const Rational c(static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 3));
        for (int j = 0; j < cols; ++j) row[j] += c * b[j];
      }
    }
    ASSERT_LE(matrix_rank(rows), matrix_rank(basis));
    ASSERT_EQ(matrix_rank(basis), matrix_rank([&] {
                auto t = basis;
                t.push_back(basis[0]);
                return t;
              }()));
  }
}

}  // namespace
}  // namespace oddcut
