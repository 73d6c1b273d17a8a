#pragma once

// Independent trajectory checker: endpoints and continuity, exact coverage
// of every leg, speed-set membership, per-stretch battery bookkeeping and
// swap semantics.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uavroute/geometry.hpp"
#include "uavroute/model.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

/// Positions closer than this (m) count as the same point.
inline constexpr double kPositionTol = 1e-6;
/// Relative slack on the per-stretch energy budget.
inline constexpr double kBudgetRelTol = 1e-9;

struct ConstraintResult {
  bool pass = true;
  std::optional<std::size_t> event;  ///< first offending event index
  std::string message;

  void fail(std::size_t e, std::string why) {
    if (!pass) return;
    pass = false;
    event = e;
    message = std::move(why);
  }
};

struct ValidationReport {
  bool pass = false;
  ConstraintResult endpoints;     ///< start at u0, end at uF, legs chained
  ConstraintResult connectivity;  ///< every leg inside the coverage union
  ConstraintResult speeds;        ///< every leg speed in the speed set
  ConstraintResult battery;       ///< every inter-swap stretch within budget
  ConstraintResult swaps;         ///< swaps at available stations with their delay
  ConstraintResult totals;        ///< reported totals match the events
  /// Smallest (effective radius - distance to station) over sampled leg
  /// points, maximised over stations. Negative means some sample is outside.
  double worst_connectivity_margin = std::numeric_limits<double>::infinity();
  /// Smallest budget minus energy over all stretches (J).
  double min_battery_margin = std::numeric_limits<double>::infinity();
};

namespace detail {

inline double coverage_margin(const NetworkMap& map, Vec2 p) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < map.stations.size(); ++m)
    best = std::max(best, map.effective_radius(m) - distance(p, map.stations[m].position));
  return best;
}

inline std::string at(std::size_t e) { return "event " + std::to_string(e) + ": "; }

}  // namespace detail

inline ValidationReport validate_trajectory(const NetworkMap& map, const UavParams& uav,
                                            const Trajectory& traj) {
  constexpr int kMarginSamples = 64;
  ValidationReport rep;
  const double full_budget = usable_energy(uav);

  Vec2 here = map.u0;
  double stretch_energy = 0.0;
  double stretch_budget = full_budget;
  std::size_t stretch_end = 0;
  double time = 0.0;
  double dist = 0.0;

  auto close_stretch = [&](std::size_t e) {
    const double margin = stretch_budget - stretch_energy;
    rep.min_battery_margin = std::min(rep.min_battery_margin, margin);
    if (stretch_energy > stretch_budget + kBudgetRelTol * full_budget)
      rep.battery.fail(e, detail::at(e) + "stretch draws " + std::to_string(stretch_energy) +
                              " J of a " + std::to_string(stretch_budget) + " J budget");
  };

  for (std::size_t e = 0; e < traj.events.size(); ++e) {
    if (const auto* leg = std::get_if<FlightLeg>(&traj.events[e])) {
      if (distance(leg->start, here) > kPositionTol)
        rep.endpoints.fail(e, detail::at(e) + "leg does not start where the previous event ended");
      if (has_outage(leg->start, leg->end, map))
        rep.connectivity.fail(e, detail::at(e) + "leg leaves coverage");
      for (int k = 0; k <= kMarginSamples; ++k) {
        const double xi = static_cast<double>(k) / kMarginSamples;
        rep.worst_connectivity_margin = std::min(
            rep.worst_connectivity_margin,
            detail::coverage_margin(map, leg->start + xi * (leg->end - leg->start)));
      }
      const bool in_set = leg->speed > 0.0 &&
                          std::find(uav.speeds.begin(), uav.speeds.end(), leg->speed) != uav.speeds.end();
      if (!in_set) {
        rep.speeds.fail(e, detail::at(e) + "speed " + std::to_string(leg->speed) + " not allowed");
      } else {
        stretch_energy += leg_energy(leg->length(), leg->speed, uav);
        time += leg->duration();
      }
      dist += leg->length();
      stretch_end = e;
      here = leg->end;
    } else {
      const auto& swap = std::get<SwapEvent>(traj.events[e]);
      close_stretch(stretch_end);
      if (swap.station >= map.charging.size()) {
        rep.swaps.fail(e, detail::at(e) + "unknown charging station");
      } else {
        const auto& cs = map.charging[swap.station];
        if (!cs.available()) rep.swaps.fail(e, detail::at(e) + "station is unavailable");
        if (distance(cs.position, here) > kPositionTol)
          rep.swaps.fail(e, detail::at(e) + "swap away from the station");
        if (swap.dwell != cs.delay) rep.swaps.fail(e, detail::at(e) + "dwell differs from the station delay");
        stretch_budget = full_budget - cs.energy_surcharge;
      }
      time += swap.dwell;
      stretch_energy = 0.0;
      stretch_end = e;
    }
  }
  close_stretch(stretch_end);
  if (distance(here, map.uF) > kPositionTol)
    rep.endpoints.fail(traj.events.empty() ? 0 : traj.events.size() - 1,
                       "trajectory does not end at uF");
  if (traj.events.empty() && !is_covered(map, map.u0))
    rep.connectivity.fail(0, "hovering point outside coverage");

  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
  if (rep.speeds.pass && !near(traj.total_time, time))
    rep.totals.fail(0, "total_time does not match the events");
  if (!near(traj.total_distance, dist)) rep.totals.fail(0, "total_distance does not match the events");

  rep.pass = rep.endpoints.pass && rep.connectivity.pass && rep.speeds.pass && rep.battery.pass &&
             rep.swaps.pass && rep.totals.pass;
  return rep;
}

}  // namespace uavroute
