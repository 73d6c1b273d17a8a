#include <gtest/gtest.h>

#include <numeric>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "uavroute/uavroute.hpp"

using namespace uavroute;

namespace {

Trajectory relay_plan() { return plan_min_time(fixture::relay_line(), fixture::short_range_uav()).trajectory; }

}  // namespace

TEST(Validate, PlannerOutputsPass) {
  const auto rep = validate_trajectory(fixture::relay_line(), fixture::short_range_uav(), relay_plan());
  EXPECT_TRUE(rep.pass);
  EXPECT_GE(rep.worst_connectivity_margin, -1e-6);
  EXPECT_GE(rep.min_battery_margin, 0.0);
}

TEST(Validate, LegLeavingCoverageFailsAtThatLeg) {
  const NetworkMap m = fixture::two_disk_detour();
  Trajectory t;
  t.append_leg(m.u0, {750, 661.4378277661477}, 30.0);
  t.append_leg({750, 661.4378277661477}, {750, 900}, 30.0);  // out past the lens
  t.append_leg({750, 900}, m.uF, 30.0);
  const auto rep = validate_trajectory(m, reference_uav(), t);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.connectivity.pass);
  EXPECT_EQ(rep.connectivity.event, std::optional<std::size_t>(1));
  EXPECT_LT(rep.worst_connectivity_margin, 0.0);
}

TEST(Validate, BatteryOverrunByOneJouleFails) {
  NetworkMap m = fixture::single_disk();
  m.d0 = 1e6;
  m.u0 = {0, 0};
  const UavParams u = reference_uav();
  const double per_metre = energy_per_metre(30.0, u);
  const double reach = usable_energy(u) / per_metre;
  m.uF = {reach, 0};
  Trajectory ok;
  ok.append_leg(m.u0, m.uF, 30.0);
  EXPECT_TRUE(validate_trajectory(m, u, ok).battery.pass);
  m.uF = {reach + 1.0 / per_metre, 0};
  Trajectory over;
  over.append_leg(m.u0, m.uF, 30.0);
  const auto rep = validate_trajectory(m, u, over);
  EXPECT_FALSE(rep.battery.pass);
  EXPECT_EQ(rep.battery.event, std::optional<std::size_t>(0));
}

TEST(Validate, SwapResetsBudget) {
  NetworkMap m = fixture::relay_line();
  const UavParams u = fixture::short_range_uav();
  Trajectory t = relay_plan();
  ASSERT_TRUE(validate_trajectory(m, u, t).pass);
  // Same legs with the swap dropped: one 6 km stretch.
  Trajectory no_swap;
  for (const auto& e : t.events)
    if (const auto* leg = std::get_if<FlightLeg>(&e)) no_swap.append_leg(leg->start, leg->end, leg->speed);
  const auto rep = validate_trajectory(m, u, no_swap);
  EXPECT_FALSE(rep.battery.pass);
}

TEST(Validate, WrongSwapSpeedOrEndpointFails) {
  const NetworkMap m = fixture::relay_line();
  const UavParams u = fixture::short_range_uav();
  const Trajectory good = relay_plan();

  Trajectory bad_dwell;
  Trajectory bad_station;
  for (const auto& e : good.events) {
    if (const auto* leg = std::get_if<FlightLeg>(&e)) {
      bad_dwell.append_leg(leg->start, leg->end, leg->speed);
      bad_station.append_leg(leg->start, leg->end, leg->speed);
    } else {
      bad_dwell.append_swap(0, 10.0);
      bad_station.append_swap(7, 100.0);
    }
  }
  EXPECT_FALSE(validate_trajectory(m, u, bad_dwell).swaps.pass);
  EXPECT_FALSE(validate_trajectory(m, u, bad_station).swaps.pass);

  Trajectory slow;
  slow.append_leg(m.u0, {3000, 0}, 12.5);
  EXPECT_FALSE(validate_trajectory(m, u, slow).speeds.pass);
  EXPECT_FALSE(validate_trajectory(m, u, slow).endpoints.pass);

  NetworkMap unavailable = m;
  unavailable.charging[0].delay = kInf;
  EXPECT_FALSE(validate_trajectory(unavailable, u, good).swaps.pass);

  Trajectory lied = good;
  lied.total_time += 1.0;
  EXPECT_FALSE(validate_trajectory(m, u, lied).totals.pass);
}

TEST(Validate, SurchargeShrinksPostSwapBudget) {
  NetworkMap m = fixture::relay_line();
  const UavParams u = fixture::short_range_uav();
  const Trajectory t = relay_plan();
  m.charging[0].energy_surcharge = usable_energy(u) - 0.5 * leg_energy(3000.0, 30.0, u);
  const auto rep = validate_trajectory(m, u, t);
  EXPECT_FALSE(rep.battery.pass);
  EXPECT_EQ(rep.battery.event, std::optional<std::size_t>(2));
}

TEST(Validate, EmptyTrajectoryOnlyWhenTerminalsCoincide) {
  NetworkMap m = fixture::single_disk();
  EXPECT_FALSE(validate_trajectory(m, reference_uav(), Trajectory{}).pass);
  m.uF = m.u0;
  EXPECT_TRUE(validate_trajectory(m, reference_uav(), Trajectory{}).pass);
}

TEST(Validate, BatteryMarginAgreesWithTimeStepping) {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 100; ++seed) {
    const UavParams u = fixture::tiny_battery_uav();
    const NetworkMap m = fixture::chain_map(seed, 6, 1 + seed % 3);
    for (const PlanResult& r : {plan_min_time(m, u), plan_min_energy(m, u)}) {
      const auto rep = validate_trajectory(m, u, r.trajectory);
      ASSERT_TRUE(rep.pass);
      const double stepped = oracle::integrate_min_margin(m, u, r.trajectory);
      // Step error is bounded by one step of the largest draw.
      EXPECT_NEAR(rep.min_battery_margin, stepped, 1e-6 * usable_energy(u)) << "seed " << seed;
      EXPECT_GE(stepped, -1e-6 * usable_energy(u));
      ++checked;
    }
  }
}

// --- lattice oracle sanity -------------------------------------------------------

TEST(LatticeOracle, StraightLineInsideOneDisk) {
  const NetworkMap m = fixture::single_disk();
  const PlanResult g = grid_oracle_plan(m, reference_uav(), 4.0, Objective::kTime, false);
  ASSERT_TRUE(g.feasible);
  const double straight = distance(m.u0, m.uF);
  EXPECT_GE(g.trajectory.total_distance, straight - 1e-9);
  EXPECT_LE(g.trajectory.total_distance, 1.01 * straight);
  EXPECT_TRUE(validate_trajectory(m, reference_uav(), g.trajectory).pass);
}

TEST(LatticeOracle, RefinementNeverLengthensTheDetour) {
  const NetworkMap m = fixture::two_disk_detour();
  double prev = kInf;
  for (double step : {8.0, 4.0, 2.0}) {
    const PlanResult g = grid_oracle_plan(m, reference_uav(), step, Objective::kTime, false);
    ASSERT_TRUE(g.feasible);
    EXPECT_LE(g.trajectory.total_distance, prev + 1e-9) << "step " << step;
    prev = g.trajectory.total_distance;
  }
  EXPECT_GE(prev, plan_unlimited(m, 30.0).trajectory.total_distance - 1e-9);
}

TEST(LatticeOracle, MovesArePrimitiveAndSymmetric) {
  const auto moves = detail::lattice_moves();
  EXPECT_EQ(moves.size(), 80u);
  for (const auto& mv : moves) {
    EXPECT_EQ(std::gcd(std::abs(mv.dx), std::abs(mv.dy)), 1);
    const bool mirrored = std::any_of(moves.begin(), moves.end(),
                                      [&](const auto& o) { return o.dx == -mv.dx && o.dy == -mv.dy; });
    EXPECT_TRUE(mirrored);
  }
}
