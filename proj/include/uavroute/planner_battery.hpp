#pragma once

// Minimum-time and minimum-energy planning with battery swaps.
//
// Two levels. Locally, every ordered pair of terminals/charging stations gets
// the shortest covered path through boundary intersections and the fastest
// speed whose single-battery range covers it. Globally, a directed graph over
// {u0, stations, uF} weighted by flight time plus the swap delay at the
// arrival station (or by flight energy) is searched with Dijkstra.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uavroute/geometry.hpp"
#include "uavroute/graph.hpp"
#include "uavroute/model.hpp"
#include "uavroute/planner.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

// --- speed selection --------------------------------------------------------

struct SpeedCheck {
  bool feasible = false;
  double max_speed = 0.0;
};

/// Range at speed v on a battery whose usable budget is `budget` joules.
inline double range_with_budget(double v, double budget, const UavParams& uav) {
  if (v <= 0.0 || budget <= 0.0) return 0.0;
  return v * uav.battery.transfer_ratio * budget / propulsion_power(v, uav);
}

/// Fastest speed in the set whose range on one battery (reduced by
/// `budget_reduction` J) covers `length`.
inline SpeedCheck max_feasible_speed(double length, const UavParams& uav,
                                     double budget_reduction = 0.0) {
  if (!(length >= 0.0)) throw std::invalid_argument("length must be >= 0");
  if (length == 0.0) return {true, uav.max_speed()};
  const double budget = usable_energy(uav) - budget_reduction;
  for (auto it = uav.speeds.rbegin(); it != uav.speeds.rend(); ++it)
    if (*it > 0.0 && range_with_budget(*it, budget, uav) >= length) return {true, *it};
  return {false, 0.0};
}

/// Most energy-efficient speed among those whose range covers `length`.
inline std::optional<double> efficient_feasible_speed(double length, const UavParams& uav,
                                                      double budget_reduction = 0.0) {
  const double budget = usable_energy(uav) - budget_reduction;
  std::optional<double> best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (double v : uav.speeds) {
    if (v <= 0.0) continue;
    if (length > 0.0 && range_with_budget(v, budget, uav) < length) continue;
    const double cost = energy_per_metre(v, uav);
    if (cost <= best_cost) {
      best_cost = cost;
      best = v;
    }
  }
  return best;
}

// --- step 1: covered segments -----------------------------------------------

struct CoveredSegment {
  std::size_t a = 0;
  std::size_t b = 0;
  double length = 0.0;
};

/// Every covered segment among V_all = {u0, stations, uF, intersections},
/// filed under each terminal/station endpoint, or under `inner` when both
/// endpoints are intersection points.
struct EdgeSets {
  GlobalIndex index;
  std::vector<Vec2> points;  ///< global vertices first, then intersections
  std::vector<CoveredSegment> inner;
  std::vector<std::vector<CoveredSegment>> incident;  ///< one list per global vertex
  PlanGraph<std::size_t> graph{false};

  std::size_t special_count() const { return index.size(); }
};

inline EdgeSets precompute_edge_sets(const NetworkMap& map) {
  EdgeSets sets;
  sets.index = GlobalIndex{map.charging.size()};
  const std::size_t S = sets.index.size();
  sets.points.resize(S);
  sets.points[sets.index.start()] = map.u0;
  sets.points[sets.index.final()] = map.uF;
  for (std::size_t n = 0; n < map.charging.size(); ++n)
    sets.points[sets.index.of_station(n)] = map.charging[n].position;
  for (Vec2 p : build_intersection_vertices(map)) {
    bool dup = false;
    for (std::size_t s = 0; s < S && !dup; ++s) dup = distance(p, sets.points[s]) <= kVertexMergeTol;
    if (!dup) sets.points.push_back(p);
  }
  sets.incident.resize(S);
  for (std::size_t i = 0; i < sets.points.size(); ++i) sets.graph.add_vertex(i);
  for (std::size_t i = 0; i < sets.points.size(); ++i)
    for (std::size_t j = i + 1; j < sets.points.size(); ++j) {
      const double len = distance(sets.points[i], sets.points[j]);
      if (len == 0.0 || has_outage(sets.points[i], sets.points[j], map)) continue;
      const CoveredSegment seg{i, j, len};
      if (i < S) sets.incident[i].push_back(seg);
      if (j < S) sets.incident[j].push_back(seg);
      if (i >= S && j >= S) sets.inner.push_back(seg);
      sets.graph.add_edge(i, j, len);
    }
  return sets;
}

// --- step 2: local level ----------------------------------------------------

inline double departure_surcharge(const NetworkMap& map, const GlobalIndex& idx, std::size_t g) {
  return idx.is_station(g) ? map.charging[idx.station_of(g)].energy_surcharge : 0.0;
}

/// Shortest covered path between global vertices `from` and `to` over the
/// pair plus all intersection points, and its fastest single-battery speed.
inline LocalRoute local_route(const NetworkMap& map, const UavParams& uav, const EdgeSets& sets,
                              std::size_t from, std::size_t to) {
  LocalRoute route;
  route.from = from;
  route.to = to;
  const Vec2 p = sets.points.at(from);
  const Vec2 q = sets.points.at(to);
  if (!coverage_connected(p, q, map)) return route;

  if (p == q) {
    route.length = 0.0;
    route.path = {p};
  } else {
    std::vector<bool> allowed(sets.points.size(), false);
    for (std::size_t i = sets.special_count(); i < allowed.size(); ++i) allowed[i] = true;
    allowed[from] = allowed[to] = true;
    const auto sp = dijkstra(sets.graph, from, to, {TieBreak::kLexicographic, &allowed});
    if (!sp) return route;
    route.length = sp->weight;
    for (std::size_t v : sp->vertices) route.path.push_back(sets.points[v]);
  }
  route.connected = true;
  const auto check = max_feasible_speed(route.length, uav, departure_surcharge(map, sets.index, from));
  if (check.feasible) route.max_speed = check.max_speed;
  return route;
}

/// Local routes for every ordered pair (from in {u0, stations}, to in
/// {stations, uF}, from != to), skipping unavailable stations. Ordered by
/// (from, to).
inline std::vector<LocalRoute> compute_local_routes(const NetworkMap& map, const UavParams& uav,
                                                    const EdgeSets& sets) {
  const GlobalIndex& idx = sets.index;
  auto usable = [&](std::size_t g) {
    return !idx.is_station(g) || map.charging[idx.station_of(g)].available();
  };
  std::vector<LocalRoute> routes;
  for (std::size_t from = 0; from < idx.size(); ++from) {
    if (from == idx.final() || !usable(from)) continue;
    for (std::size_t to = 1; to < idx.size(); ++to) {
      if (to == from || !usable(to)) continue;
      routes.push_back(local_route(map, uav, sets, from, to));
    }
  }
  return routes;
}

// --- step 3: global level ---------------------------------------------------

/// Global search over precomputed local routes. Shared by the exact planners
/// and the lattice oracle.
inline PlanResult solve_global(const NetworkMap& map, const UavParams& uav,
                               std::vector<LocalRoute> routes, Objective objective) {
  if (objective == Objective::kTimeUnlimited)
    throw std::invalid_argument("solve_global handles battery objectives only");
  const GlobalIndex idx{map.charging.size()};
  PlanResult result;
  result.objective = objective;

  PlanGraph<std::size_t> g(true);
  for (std::size_t v = 0; v < idx.size(); ++v) g.add_vertex(v);
  std::vector<std::optional<std::size_t>> lookup(idx.size() * idx.size());
  std::vector<double> speed_of(routes.size(), 0.0);
  std::vector<double> weight_of(routes.size(), 0.0);
  for (std::size_t r = 0; r < routes.size(); ++r) {
    const LocalRoute& route = routes[r];
    if (!route.connected || !route.max_speed) continue;
    double weight;
    if (objective == Objective::kTime) {
      speed_of[r] = *route.max_speed;
      const double tau = idx.is_station(route.to) ? map.charging[idx.station_of(route.to)].delay : 0.0;
      if (!std::isfinite(tau)) continue;
      weight = route.length / speed_of[r] + tau;
    } else {
      const auto v = efficient_feasible_speed(route.length, uav,
                                              departure_surcharge(map, idx, route.from));
      if (!v) continue;
      speed_of[r] = *v;
      weight = route.length == 0.0 ? 0.0 : leg_energy(route.length, *v, uav);
    }
    weight_of[r] = weight;
    g.add_edge(route.from, route.to, weight);
    lookup[route.from * idx.size() + route.to] = r;
  }

  if (!bfs_reachable(g, idx.start(), idx.final())) {
    result.local_routes = std::move(routes);
    return result;
  }
  // Parallel arcs cannot occur: one route per ordered pair.
  const auto sp = dijkstra(g, idx.start(), idx.final(), {TieBreak::kFewestHops, nullptr});
  result.feasible = true;
  result.global_sequence = sp->vertices;
  result.total_energy = 0.0;
  // The search sums weights from uF backwards; report the forward sum along
  // the mission instead.
  result.objective_value = 0.0;
  for (std::size_t k = 0; k + 1 < sp->vertices.size(); ++k) {
    const std::size_t r = *lookup[sp->vertices[k] * idx.size() + sp->vertices[k + 1]];
    const LocalRoute& route = routes[r];
    result.objective_value += weight_of[r];
    for (std::size_t i = 0; i + 1 < route.path.size(); ++i) {
      result.trajectory.append_leg(route.path[i], route.path[i + 1], speed_of[r]);
      result.total_energy += leg_energy(distance(route.path[i], route.path[i + 1]), speed_of[r], uav);
    }
    if (idx.is_station(route.to)) {
      const std::size_t n = idx.station_of(route.to);
      result.trajectory.append_swap(n, map.charging[n].delay);
    }
  }
  result.local_routes = std::move(routes);
  return result;
}

inline PlanResult plan_battery(const NetworkMap& map, const UavParams& uav, Objective objective) {
  validate_map(map);
  validate(uav);
  const EdgeSets sets = precompute_edge_sets(map);
  return solve_global(map, uav, compute_local_routes(map, uav, sets), objective);
}

/// Minimum mission time (flight plus swap dwell) under connectivity and
/// battery constraints.
inline PlanResult plan_min_time(const NetworkMap& map, const UavParams& uav) {
  return plan_battery(map, uav, Objective::kTime);
}

/// Minimum propulsion energy under the same constraints. Swap dwell does not
/// enter the objective.
inline PlanResult plan_min_energy(const NetworkMap& map, const UavParams& uav) {
  return plan_battery(map, uav, Objective::kEnergy);
}

/// Unlimited-battery plan at the UAV's top speed, with its energy filled in.
inline PlanResult plan_unlimited(const NetworkMap& map, const UavParams& uav) {
  validate(uav);
  PlanResult r = plan_unlimited(map, uav.max_speed());
  if (r.feasible) {
    r.total_energy = 0.0;
    for (const auto& e : r.trajectory.events)
      if (const auto* leg = std::get_if<FlightLeg>(&e))
        r.total_energy += leg_energy(leg->length(), leg->speed, uav);
  }
  return r;
}

// --- constant-speed energy bound ---------------------------------------------

struct SpeedSplit {
  double length = 0.0;
  double speed = 0.0;
};

struct EnergyComparison {
  double mixed = 0.0;  ///< energy flying each split at its own speed
  double fixed = 0.0;  ///< energy at the single speed giving the same total time
  double fixed_speed = 0.0;
};

/// Compares a piecewise-speed stretch with the constant speed that takes the
/// same total time. When power is convex on the speed range, fixed <= mixed.
inline EnergyComparison fixed_speed_energy_bound(double length, const std::vector<SpeedSplit>& splits,
                                                 const UavParams& uav) {
  if (splits.empty()) throw std::invalid_argument("at least one split is required");
  double sum_len = 0.0;
  double total_time = 0.0;
  EnergyComparison out;
  for (const auto& s : splits) {
    if (!(s.length >= 0.0) || !(s.speed > 0.0)) throw std::invalid_argument("bad speed split");
    sum_len += s.length;
    total_time += s.length / s.speed;
    out.mixed += s.length / s.speed * propulsion_power(s.speed, uav) / uav.battery.transfer_ratio;
  }
  if (std::abs(sum_len - length) > 1e-9 * std::max(1.0, length))
    throw std::invalid_argument("split lengths must sum to the stretch length");
  out.fixed_speed = length / total_time;
  out.fixed = total_time * propulsion_power(out.fixed_speed, uav) / uav.battery.transfer_ratio;
  return out;
}

}  // namespace uavroute
