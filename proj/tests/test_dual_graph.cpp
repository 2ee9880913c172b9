#include "kollar/dual_graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kollar;

namespace {

std::vector<DualGraph> ade_graphs(int max_m) {
  std::vector<DualGraph> out;
  for (int m = 1; m <= max_m; ++m) out.push_back(build_ade(AdeKind::A, m));
  for (int m = 4; m <= max_m; ++m) out.push_back(build_ade(AdeKind::D, m));
  for (int m = 6; m <= 8; ++m) out.push_back(build_ade(AdeKind::E, m));
  return out;
}

std::vector<BlowupLocation> all_locations(const DualGraph& g) {
  std::vector<BlowupLocation> out;
  for (const auto& v : g.vertices()) out.push_back(TailInterior{v.id});
  for (const auto& [a, b] : g.edges()) out.push_back(Node{g.vertex(a).id, g.vertex(b).id});
  return out;
}

}  // namespace

TEST(BuildAde, A3IsAChainOfMinusTwoCurves) {
  const DualGraph g = build_ade(AdeKind::A, 3);
  ASSERT_EQ(g.size(), 3u);
  for (const auto& v : g.vertices()) EXPECT_EQ(v.self_int, -2);
  EXPECT_EQ(g.edges(), (std::set<DualGraph::Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.vertex(0).id, "v1");
  EXPECT_EQ(g.vertex(2).id, "v3");
}

TEST(BuildAde, A1IsASingleCurve) {
  const DualGraph g = build_ade(AdeKind::A, 1);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.vertex(0).self_int, -2);
  EXPECT_TRUE(g.edges().empty());
}

TEST(BuildAde, D4ForkIsV2) {
  const DualGraph g = build_ade(AdeKind::D, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.degree(*g.index_of("v2")), 3u);
  EXPECT_EQ(*fork_label(AdeKind::D, 4), 2);
}

TEST(BuildAde, ForkConventionForDAndE) {
  for (int m = 4; m <= 12; ++m) {
    const DualGraph g = build_ade(AdeKind::D, m);
    EXPECT_EQ(g.degree(*g.index_of(vertex_label(m - 2))), 3u);
  }
  for (int m = 6; m <= 8; ++m) {
    const DualGraph g = build_ade(AdeKind::E, m);
    EXPECT_EQ(g.degree(*g.index_of("v3")), 3u);
    EXPECT_TRUE(g.adjacent(2, static_cast<std::size_t>(m - 1)));
  }
}

TEST(BuildAde, RejectsOutOfRange) {
  EXPECT_THROW(build_ade(AdeKind::A, 0), InvalidParameters);
  EXPECT_THROW(build_ade(AdeKind::D, 3), InvalidParameters);
  EXPECT_THROW(build_ade(AdeKind::E, 5), InvalidParameters);
  EXPECT_THROW(build_ade(AdeKind::E, 9), InvalidParameters);
}

TEST(IntersectionMatrix, Examples) {
  EXPECT_EQ(intersection_matrix(build_ade(AdeKind::A, 2)), (IntMatrix{{-2, 1}, {1, -2}}));
  EXPECT_EQ(intersection_matrix(build_chain({-1})), (IntMatrix{{-1}}));
  const IntMatrix d4 = intersection_matrix(build_ade(AdeKind::D, 4));
  EXPECT_EQ(d4, (IntMatrix{{-2, 1, 0, 0}, {1, -2, 1, 1}, {0, 1, -2, 0}, {0, 1, 0, -2}}));
}

TEST(IntersectionMatrix, MatchesAdjacencyOnRandomAdeGraphs) {
  std::mt19937_64 rng(7);
  const auto graphs = ade_graphs(25);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const DualGraph& g = graphs[pick(rng)];
    const IntMatrix m = intersection_matrix(g);
    ASSERT_TRUE(m.is_symmetric());
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(m(i, i), g.vertex(i).self_int);
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) {
          EXPECT_EQ(m(i, j), g.adjacent(i, j) ? 1 : 0);
        }
    }
  }
}

TEST(IsContractible, Examples) {
  EXPECT_TRUE(is_contractible(IntMatrix{{-2, 1}, {1, -2}}));
  EXPECT_FALSE(is_contractible(IntMatrix{{0}}));
  const IntMatrix e8 = intersection_matrix(build_ade(AdeKind::E, 8));
  EXPECT_TRUE(is_contractible(e8));
  EXPECT_TRUE(oracle::negative_definite_by_minors(e8));
  EXPECT_EQ(oracle::bareiss_determinant(e8), Integer(1));
}

TEST(IsContractible, EveryAdeGraph) {
  for (const auto& g : ade_graphs(30)) EXPECT_TRUE(is_contractible(g));
}

TEST(IsContractible, ExtendedDynkinIsNot) {
  // A chain of (-2)-curves with an extra (-1) or an affine-type tail is not negative definite.
  EXPECT_FALSE(is_contractible(build_chain({-2, -1, -2})));
  EXPECT_FALSE(is_contractible(build_chain({-1, -1})));
}

TEST(GroupOrder, Examples) {
  EXPECT_EQ(group_order(build_chain({-2, -2})), Integer(3));
  EXPECT_EQ(group_order(build_chain({-3, -2})), Integer(5));
  EXPECT_EQ(group_order(build_chain({})), Integer(1));
  EXPECT_THROW(group_order(build_chain({0})), NotContractible);
}

TEST(GroupOrder, AdeDeterminants) {
  for (int m = 4; m <= 20; ++m) EXPECT_EQ(group_order(build_ade(AdeKind::D, m)), Integer(4));
  EXPECT_EQ(group_order(build_ade(AdeKind::E, 6)), Integer(3));
  EXPECT_EQ(group_order(build_ade(AdeKind::E, 7)), Integer(2));
  EXPECT_EQ(group_order(build_ade(AdeKind::E, 8)), Integer(1));
}

TEST(GroupOrder, ChainFamilies) {
  for (int k = 1; k <= 100; ++k) {
    std::vector<int> twos(static_cast<std::size_t>(k), -2);
    EXPECT_EQ(group_order(build_chain(twos)), Integer(k + 1)) << k;
    twos.front() = -3;
    EXPECT_EQ(group_order(build_chain(twos)), Integer(2 * k + 1)) << k;
  }
}

TEST(BlowUp, TailOfAmGivesMinusThreeChain) {
  const DualGraph g = blow_up(build_ade(AdeKind::A, 4), TailInterior{"v1"});
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.vertex(4).id, "b(v1)");
  EXPECT_EQ(g.vertex(4).self_int, -1);
  EXPECT_EQ(g.vertex(0).self_int, -3);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(g.vertex(i).self_int, -2);
  EXPECT_TRUE(g.adjacent(4, 0));
  EXPECT_EQ(g.degree(4), 1u);
}

TEST(BlowUp, NodeOfA3) {
  const DualGraph g = blow_up(build_ade(AdeKind::A, 3), Node{"v1", "v2"});
  ASSERT_EQ(g.size(), 4u);
  const std::size_t w = *g.index_of("b(v1,v2)");
  EXPECT_EQ(g.vertex(0).self_int, -3);
  EXPECT_EQ(g.vertex(1).self_int, -3);
  EXPECT_EQ(g.vertex(2).self_int, -2);
  EXPECT_EQ(g.vertex(w).self_int, -1);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(w, 0));
  EXPECT_TRUE(g.adjacent(w, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(BlowUp, A1Tail) {
  const DualGraph g = blow_up(build_ade(AdeKind::A, 1), TailInterior{"v1"});
  EXPECT_EQ(intersection_matrix(g), (IntMatrix{{-3, 1}, {1, -1}}));
}

TEST(BlowUp, InvalidLocations) {
  const DualGraph g = build_ade(AdeKind::A, 3);
  EXPECT_THROW(blow_up(g, TailInterior{"v9"}), InvalidLocation);
  EXPECT_THROW(blow_up(g, Node{"v1", "v3"}), InvalidLocation);
}

TEST(BlowUp, FreshIdsStayUnique) {
  const DualGraph once = blow_up(build_ade(AdeKind::A, 2), TailInterior{"v1"});
  const DualGraph twice = blow_up(once, TailInterior{"v1"});
  EXPECT_EQ(twice.vertex(3).id, "b(v1)#2");
  EXPECT_EQ(blow_up(build_ade(AdeKind::A, 2), TailInterior{"v1"}), once);
}

TEST(BlowUp, PreservesNegativeDefiniteness) {
  for (const auto& g : ade_graphs(14)) {
    for (const auto& loc : all_locations(g)) {
      const DualGraph up = blow_up(g, loc);
      EXPECT_TRUE(is_contractible(up)) << to_string(loc);
      EXPECT_EQ(oracle::bareiss_determinant(intersection_matrix(up)), -oracle::bareiss_determinant(intersection_matrix(g)));
    }
  }
}

TEST(Components, WithoutMarkedVertex) {
  const DualGraph g = build_ade(AdeKind::D, 5);
  const auto comps = g.components_without(*g.index_of("v3"));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<std::size_t>{3}));
  EXPECT_EQ(comps[2], (std::vector<std::size_t>{4}));
}
