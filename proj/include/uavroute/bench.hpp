#pragma once

// Experiment harness: parameter sweeps on one seeded map and a runtime
// scaling probe.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavroute/mapgen.hpp"
#include "uavroute/planner_battery.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

enum class SweepVariable { kTau, kBatteryWeight, kPayload, kFixedSpeed, kUnavailable };

inline const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kTau: return "tau";
    case SweepVariable::kBatteryWeight: return "w2";
    case SweepVariable::kPayload: return "w3";
    case SweepVariable::kFixedSpeed: return "v_fix";
    case SweepVariable::kUnavailable: return "unavailable";
  }
  return "?";
}

struct ExperimentSpec {
  MapGenParams map;
  SweepVariable variable = SweepVariable::kPayload;
  std::vector<double> values;
  Objective objective = Objective::kTime;
  std::size_t station = 0;  ///< charging station swept by kTau
};

struct SweepRow {
  double value = 0.0;
  double objective = kInf;
  bool feasible = false;
  std::size_t swaps = 0;
};

inline PlanResult run_objective(const NetworkMap& map, const UavParams& uav, Objective o) {
  switch (o) {
    case Objective::kTimeUnlimited: return plan_unlimited(map, uav);
    case Objective::kTime: return plan_min_time(map, uav);
    case Objective::kEnergy: return plan_min_energy(map, uav);
  }
  throw std::invalid_argument("unknown objective");
}

/// Applies one sweep value to a copy of (map, uav).
inline void apply_sweep_value(SweepVariable var, double value, std::size_t station, NetworkMap& map,
                              UavParams& uav) {
  switch (var) {
    case SweepVariable::kTau:
      if (station >= map.charging.size()) throw std::invalid_argument("swept station out of range");
      map.charging[station].delay = value;
      break;
    case SweepVariable::kBatteryWeight: uav.battery_weight = value; break;
    case SweepVariable::kPayload: uav.payload_weight = value; break;
    case SweepVariable::kFixedSpeed: uav.speeds = {0.0, value}; break;
    case SweepVariable::kUnavailable: {
      const auto k = static_cast<std::size_t>(value);
      if (static_cast<double>(k) != value || k > map.charging.size())
        throw std::invalid_argument("unavailable count must be an integer <= N");
      for (std::size_t n = 0; n < k; ++n) map.charging[n].delay = kInf;
      break;
    }
  }
}

/// One planner run per sweep value on a fixed map.
inline std::vector<SweepRow> sweep(const NetworkMap& map, const UavParams& uav, const ExperimentSpec& spec) {
  std::vector<SweepRow> rows;
  for (double value : spec.values) {
    NetworkMap m = map;
    UavParams u = uav;
    apply_sweep_value(spec.variable, value, spec.station, m, u);
    const PlanResult r = run_objective(m, u, spec.objective);
    rows.push_back({value, r.objective_value, r.feasible, r.trajectory.swap_count()});
  }
  return rows;
}

inline std::vector<SweepRow> sweep(const ExperimentSpec& spec) {
  const auto map = generate_map(spec.map);
  if (!map) throw std::runtime_error("no feasible map for seed " + std::to_string(spec.map.seed));
  return sweep(*map, spec.map.uav, spec);
}

inline void write_table(std::ostream& os, SweepVariable var, const std::vector<SweepRow>& rows) {
  char buf[128];
  os << to_string(var) << ",objective,feasible,swaps\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%zu\n", r.value, r.objective, r.feasible ? 1 : 0, r.swaps);
    os << buf;
  }
}

// --- scaling ------------------------------------------------------------------

struct ScalingRow {
  std::size_t stations = 0;
  std::size_t charging = 0;
  double median_seconds = 0.0;
  std::size_t local_routes = 0;  ///< local-level route computations per plan
};

/// Median wall time of plan_min_time over `repetitions` unconditioned maps per
/// (M, N), drawn on a square of side `size`.
inline std::vector<ScalingRow> scaling_probe(const std::vector<std::size_t>& Ms,
                                             const std::vector<std::size_t>& Ns, std::size_t repetitions,
                                             std::uint64_t seed, double size = 5000.0) {
  if (repetitions == 0) throw std::invalid_argument("repetitions must be positive");
  std::vector<ScalingRow> rows;
  const UavParams uav = reference_uav();
  for (std::size_t M : Ms)
    for (std::size_t N : Ns) {
      MapGenParams p;
      p.stations = M;
      p.charging = N;
      p.size = size;
      PortableRng rng(seed ^ (M * 1000003u + N));
      std::vector<double> times;
      std::size_t routes = 0;
      for (std::size_t k = 0; k < repetitions; ++k) {
        const NetworkMap map = draw_map(p, rng);
        const auto t0 = std::chrono::steady_clock::now();
        const PlanResult r = plan_min_time(map, uav);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
        routes = r.local_routes.size();
      }
      std::sort(times.begin(), times.end());
      const std::size_t h = times.size() / 2;
      const double median = times.size() % 2 ? times[h] : 0.5 * (times[h - 1] + times[h]);
      rows.push_back({M, N, median, routes});
    }
  return rows;
}

/// Least-squares slope of log(median time) against log(M).
inline double loglog_slope(const std::vector<ScalingRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.stations == 0 || !(r.median_seconds > 0.0)) continue;
    const double x = std::log(static_cast<double>(r.stations));
    const double y = std::log(r.median_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double den = static_cast<double>(n) * sxx - sx * sx;
  if (n < 2 || den == 0.0) return std::nan("");
  return (static_cast<double>(n) * sxy - sx * sy) / den;
}

inline void write_table(std::ostream& os, const std::vector<ScalingRow>& rows) {
  char buf[128];
  os << "M,N,median_seconds,local_routes\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.6g,%zu\n", r.stations, r.charging, r.median_seconds, r.local_routes);
    os << buf;
  }
}

}  // namespace uavroute
