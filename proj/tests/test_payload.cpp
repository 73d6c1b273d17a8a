#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "uavroute/uavroute.hpp"

using namespace uavroute;

namespace {

// Largest k with some speed covering `len`, by direct range evaluation.
std::size_t payload_steps_longhand(double len, const UavParams& base, double eps, std::size_t k_max) {
  std::size_t best = 0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    UavParams u = base;
    u.payload_weight = static_cast<double>(k) * eps;
    bool ok = false;
    for (double v : u.speeds)
      if (v > 0 && max_flight_distance(v, u) >= len) ok = true;
    if (!ok) break;
    best = k;
  }
  return best;
}

PayloadQuery query(const NetworkMap& m, const UavParams& u) {
  PayloadQuery q;
  q.map = m;
  q.uav = u;
  return q;
}

}  // namespace

// --- bottleneck --------------------------------------------------------------

TEST(Bottleneck, SingleEdge) {
  const auto b = bottleneck_edge(2, {{0, 1, 7.0}}, 0, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->length, 7.0);
}

TEST(Bottleneck, ParallelRoutesPickSmallerMaximum) {
  // 0-1-3 has hops 5 and 5; 0-2-3 has 9 and 1.
  const auto b = bottleneck_edge(4, {{0, 1, 5.0}, {1, 3, 5.0}, {0, 2, 9.0}, {2, 3, 1.0}}, 0, 3);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->length, 5.0);
  EXPECT_EQ(b->a, 0u);
  EXPECT_EQ(b->b, 1u);
}

TEST(Bottleneck, DisconnectedIsEmpty) {
  EXPECT_FALSE(bottleneck_edge(3, {{0, 1, 1.0}}, 0, 2));
  EXPECT_FALSE(bottleneck_edge(2, {}, 0, 1));
}

TEST(Bottleneck, SameEndpointsCostNothing) {
  const auto b = bottleneck_edge(2, {{0, 1, 4.0}}, 1, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->length, 0.0);
}

TEST(Bottleneck, OutOfRangeThrows) {
  EXPECT_THROW(bottleneck_edge(2, {{0, 5, 1.0}}, 0, 1), std::out_of_range);
  EXPECT_THROW(bottleneck_edge(2, {}, 0, 3), std::out_of_range);
}

TEST(Bottleneck, MatchesMinimaxEnumeration) {
  PortableRng rng(44);
  int connected = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7);
    std::vector<UndirectedEdge> edges;
    std::vector<oracle::Edge> plain;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng.uniform() < 0.35) {
          const double w = 1.0 + std::floor(rng.uniform() * 6);
          edges.push_back({a, b, w});
          plain.push_back({a, b, w});
        }
    const auto got = bottleneck_edge(n, edges, 0, n - 1);
    const auto want = oracle::brute_force_minimax(n, plain, 0, n - 1);
    ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(want)) << "graph " << k;
    if (!got) continue;
    ++connected;
    EXPECT_EQ(got->length, *want) << "graph " << k;
    const bool listed = std::any_of(edges.begin(), edges.end(), [&](const UndirectedEdge& e) {
      return e.a == got->a && e.b == got->b && e.length == got->length;
    });
    EXPECT_TRUE(listed);
  }
  EXPECT_GT(connected, 50);
}

TEST(Bottleneck, StationGraphOfRelayLine) {
  const NetworkMap m = fixture::relay_line();
  const EdgeSets s = precompute_edge_sets(m);
  const auto b = bottleneck_edge(compute_local_routes(m, reference_uav(), s), s.index);
  ASSERT_TRUE(b);
  EXPECT_DOUBLE_EQ(b->length, 3000.0);
  EXPECT_EQ(b->a, 0u);
  EXPECT_EQ(b->b, 1u);
}

// --- payload search -------------------------------------------------------------

TEST(MaxPayload, ShortHopHitsTheCap) {
  PayloadQuery q = query(fixture::single_disk(), reference_uav());
  q.k_max = 20;
  const auto r = max_payload(q);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.steps, 20u);
  EXPECT_DOUBLE_EQ(r.payload, 2.0);
}

TEST(MaxPayload, DisconnectedTerminalsAreInfeasible) {
  NetworkMap m = fixture::single_disk();
  m.uF = {9000, 0};
  const auto r = max_payload(query(m, reference_uav()));
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.bottleneck);
}

TEST(MaxPayload, HopBeyondEmptyRangeIsInfeasible) {
  NetworkMap m = fixture::relay_line();
  m.charging.clear();
  // Even empty, the small battery cannot fly 6 km.
  const auto r = max_payload(query(m, fixture::tiny_battery_uav()));
  ASSERT_TRUE(r.bottleneck);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.steps, 0u);
}

TEST(MaxPayload, RelayLineMatchesLonghandRange) {
  const NetworkMap m = fixture::relay_line();
  const UavParams u = fixture::short_range_uav();
  const auto r = max_payload(query(m, u));
  ASSERT_TRUE(r.feasible);
  const std::size_t want = payload_steps_longhand(3000.0, u, 0.1, 50);
  EXPECT_EQ(r.steps, want);
  EXPECT_GT(want, 0u);
  EXPECT_LT(want, 50u);
}

TEST(MaxPayload, BoundaryAgreesWithMinTimePlanner) {
  const UavParams base = fixture::tiny_battery_uav();
  int interior = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const NetworkMap m = fixture::chain_map(seed, 8, 2);
    const auto r = max_payload(query(m, base));
    UavParams u = base;
    u.payload_weight = r.payload;
    EXPECT_EQ(plan_min_time(m, u).feasible, r.feasible) << "seed " << seed;
    if (!r.feasible || r.steps == 50) continue;
    ++interior;
    u.payload_weight = r.payload + 0.1;
    EXPECT_FALSE(plan_min_time(m, u).feasible) << "seed " << seed;
  }
  EXPECT_GT(interior, 10);
}

TEST(MaxPayload, DisablingStationsNeverRaisesPayload) {
  const UavParams u = fixture::tiny_battery_uav();
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const NetworkMap m = fixture::chain_map(seed, 8, 3);
    const auto base = max_payload(query(m, u));
    for (std::size_t n = 0; n < m.charging.size(); ++n) {
      NetworkMap less = m;
      less.charging[n].delay = kInf;
      const auto r = max_payload(query(less, u));
      if (!base.feasible) {
        EXPECT_FALSE(r.feasible);
      } else if (r.feasible) {
        EXPECT_LE(r.steps, base.steps);
      }
    }
  }
}

TEST(MaxPayload, DelaysDoNotMatter) {
  NetworkMap m = fixture::relay_line();
  const UavParams u = fixture::short_range_uav();
  const auto a = max_payload(query(m, u));
  m.charging[0].delay = 5000.0;
  EXPECT_EQ(max_payload(query(m, u)).steps, a.steps);
}

TEST(MaxPayload, RejectsSurchargesAndBadQuery) {
  NetworkMap m = fixture::relay_line();
  m.charging[0].energy_surcharge = 10.0;
  EXPECT_THROW(max_payload(query(m, reference_uav())), std::invalid_argument);
  PayloadQuery q = query(fixture::single_disk(), reference_uav());
  q.eps_w = 0.0;
  EXPECT_THROW(max_payload(q), std::invalid_argument);
  q.eps_w = 0.1;
  q.k_max = 0;
  EXPECT_THROW(max_payload(q), std::invalid_argument);
}
