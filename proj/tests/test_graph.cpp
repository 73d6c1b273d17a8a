#include <gtest/gtest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "uavroute/graph.hpp"
#include "uavroute/mapgen.hpp"

using namespace uavroute;

namespace {

struct RandomGraph {
  std::size_t n;
  std::vector<oracle::Edge> edges;
};

RandomGraph random_graph(PortableRng& rng, std::size_t max_n, double density, bool allow_parallel = true) {
  RandomGraph g;
  g.n = 2 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_n - 1));
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) {
      if (a == b || rng.uniform() > density) continue;
      // Small integer weights make ties common and exact.
      g.edges.push_back({a, b, 1.0 + std::floor(rng.uniform() * 4.0)});
      if (allow_parallel && rng.uniform() < 0.05) g.edges.push_back({a, b, 1.0 + std::floor(rng.uniform() * 4.0)});
    }
  return g;
}

PlanGraph<std::size_t> build(const RandomGraph& r, bool directed) {
  PlanGraph<std::size_t> g(directed);
  for (std::size_t i = 0; i < r.n; ++i) g.add_vertex(i);
  for (const auto& e : r.edges) g.add_edge(e.a, e.b, e.w);
  return g;
}

}  // namespace

TEST(Dijkstra, SingleEdge) {
  PlanGraph<char> g(true);
  g.add_vertex('s');
  g.add_vertex('t');
  g.add_edge(0, 1, 5.0);
  const auto p = dijkstra(g, 0, 1);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->weight, 5.0);
  EXPECT_EQ(p->vertices, (std::vector<std::size_t>{0, 1}));
}

TEST(Dijkstra, DiamondPrefersTwoCheapHops) {
  PlanGraph<int> g(false);
  for (int i = 0; i < 3; ++i) g.add_vertex(i);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(0, 2, 3.0);
  const auto p = dijkstra(g, 0, 2);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->weight, 2.0);
  EXPECT_EQ(p->vertices.size(), 3u);
}

TEST(Dijkstra, UnreachableIsEmpty) {
  PlanGraph<int> g(true);
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(1, 0, 1.0);
  EXPECT_FALSE(dijkstra(g, 0, 1));
}

TEST(Dijkstra, MatchesExhaustiveEnumeration) {
  PortableRng rng(5);
  for (int k = 0; k < 100; ++k) {
    const bool directed = k % 2 == 0;
    const RandomGraph r = random_graph(rng, 8, 0.35);
    const auto g = build(r, directed);
    const std::size_t t = r.n - 1;
    const auto got = dijkstra(g, 0, t);
    const auto want = oracle::brute_force_shortest(r.n, r.edges, directed, 0, t);
    ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(want)) << "graph " << k;
    if (!got) continue;
    EXPECT_EQ(got->weight, want->weight) << "graph " << k;
    EXPECT_EQ(got->vertices, want->vertices) << "graph " << k;
  }
}

TEST(Dijkstra, FewestHopsTieBreakMatchesEnumeration) {
  PortableRng rng(6);
  for (int k = 0; k < 100; ++k) {
    const RandomGraph r = random_graph(rng, 8, 0.4);
    const auto g = build(r, true);
    const auto got = dijkstra(g, 0, r.n - 1, {TieBreak::kFewestHops, nullptr});
    const auto want = oracle::brute_force_shortest(r.n, r.edges, true, 0, r.n - 1, true);
    ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(want));
    if (!got) continue;
    EXPECT_EQ(got->weight, want->weight);
    EXPECT_EQ(got->vertices, want->vertices) << "graph " << k;
  }
}

TEST(Dijkstra, WeightNeverExceedsAnyEnumeratedPath) {
  PortableRng rng(8);
  for (int k = 0; k < 50; ++k) {
    const RandomGraph r = random_graph(rng, 7, 0.4);
    const auto g = build(r, true);
    const auto got = dijkstra(g, 0, r.n - 1);
    oracle::for_each_simple_path(r.n, r.edges, true, 0, r.n - 1, [&](const auto&, double w) {
      ASSERT_TRUE(got);
      EXPECT_LE(got->weight, w);
    });
  }
}

TEST(Dijkstra, UndirectedIsSymmetricInWeight) {
  PortableRng rng(9);
  for (int k = 0; k < 50; ++k) {
    const RandomGraph r = random_graph(rng, 8, 0.3);
    const auto g = build(r, false);
    const auto st = dijkstra(g, 0, r.n - 1), ts = dijkstra(g, r.n - 1, 0);
    ASSERT_EQ(static_cast<bool>(st), static_cast<bool>(ts));
    if (st) {
      EXPECT_EQ(st->weight, ts->weight);
    }
  }
}

TEST(Dijkstra, IndependentOfEdgeInsertionOrder) {
  PortableRng rng(10);
  for (int k = 0; k < 50; ++k) {
    RandomGraph r = random_graph(rng, 8, 0.4);
    const auto base = dijkstra(build(r, true), 0, r.n - 1);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      for (std::size_t i = r.edges.size(); i > 1; --i)
        std::swap(r.edges[i - 1], r.edges[static_cast<std::size_t>(rng.uniform() * static_cast<double>(i))]);
      const auto again = dijkstra(build(r, true), 0, r.n - 1);
      ASSERT_EQ(static_cast<bool>(base), static_cast<bool>(again));
      if (base) {
        EXPECT_EQ(base->weight, again->weight);
        EXPECT_EQ(base->vertices, again->vertices);
      }
    }
  }
}

TEST(Dijkstra, AllowedMaskHidesVertices) {
  PlanGraph<int> g(false);
  for (int i = 0; i < 4; ++i) g.add_vertex(i);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 3, 1.0);
  g.add_edge(0, 2, 2.0);
  g.add_edge(2, 3, 2.0);
  std::vector<bool> allowed{true, false, true, true};
  const auto p = dijkstra(g, 0, 3, {TieBreak::kLexicographic, &allowed});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<std::size_t>{0, 2, 3}));
  allowed[2] = false;
  EXPECT_FALSE(dijkstra(g, 0, 3, {TieBreak::kLexicographic, &allowed}));
}

TEST(Dijkstra, ZeroWeightEdgesTerminate) {
  PlanGraph<int> g(false);
  for (int i = 0; i < 4; ++i) g.add_vertex(i);
  g.add_edge(0, 1, 0.0);
  g.add_edge(1, 2, 0.0);
  g.add_edge(2, 0, 0.0);
  g.add_edge(2, 3, 1.0);
  const auto p = dijkstra(g, 0, 3);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->weight, 1.0);
  EXPECT_EQ(p->vertices.back(), 3u);
}

TEST(PlanGraphContract, RejectsBadInput) {
  PlanGraph<int> g(true);
  g.add_vertex(0);
  EXPECT_THROW(g.add_vertex(0), std::invalid_argument);
  g.add_vertex(1);
  EXPECT_THROW(g.add_edge(0, 1, -1.0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1, kInf), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5, 1.0), std::out_of_range);
  EXPECT_EQ(g.find(1), std::optional<std::size_t>(1));
  EXPECT_FALSE(g.find(7));
}

TEST(Bfs, SelfIsReachable) {
  PlanGraph<int> g(true);
  g.add_vertex(0);
  EXPECT_TRUE(bfs_reachable(g, 0, 0));
}

TEST(Bfs, IsolatedVerticesAreNot) {
  PlanGraph<int> g(true);
  g.add_vertex(0);
  g.add_vertex(1);
  EXPECT_FALSE(bfs_reachable(g, 0, 1));
}

TEST(Bfs, MatchesTransitiveClosure) {
  PortableRng rng(12);
  for (int k = 0; k < 100; ++k) {
    const bool directed = k % 3 != 0;
    const RandomGraph r = random_graph(rng, 8, 0.2);
    const auto g = build(r, directed);
    const auto reach = oracle::reachability(r.n, r.edges, directed);
    for (std::size_t s = 0; s < r.n; ++s)
      for (std::size_t t = 0; t < r.n; ++t) ASSERT_EQ(bfs_reachable(g, s, t), static_cast<bool>(reach[s][t]));
  }
}
