#pragma once

// Minimum-time path under the connectivity constraint alone (no battery
// limit), flown at the top speed. Optimal breakpoints are boundary
// intersections, so the search graph is {u0, uF} plus those points with an
// edge for every fully covered segment.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "uavroute/geometry.hpp"
#include "uavroute/graph.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

/// Distinct points closer than this are merged into one vertex.
inline constexpr double kVertexMergeTol = 1e-6;

namespace detail {

/// Complete graph of covered segments between `points`, weighted by length.
inline PlanGraph<std::size_t> covered_segment_graph(const std::vector<Vec2>& points,
                                                    const NetworkMap& map) {
  PlanGraph<std::size_t> g(false);
  for (std::size_t i = 0; i < points.size(); ++i) g.add_vertex(i);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double len = distance(points[i], points[j]);
      if (len == 0.0) continue;
      if (!has_outage(points[i], points[j], map)) g.add_edge(i, j, len);
    }
  return g;
}

}  // namespace detail

/// Shortest covered u0 -> uF path at constant speed `top_speed`.
inline PlanResult plan_unlimited(const NetworkMap& map, double top_speed) {
  validate_map(map);
  if (!(top_speed > 0.0) || !std::isfinite(top_speed))
    throw std::invalid_argument("top speed must be positive");

  PlanResult result;
  result.objective = Objective::kTimeUnlimited;
  if (!coverage_connected(map.u0, map.uF, map)) return result;

  std::vector<Vec2> points{map.u0};
  const bool same_end = distance(map.u0, map.uF) <= kVertexMergeTol;
  if (!same_end) points.push_back(map.uF);
  for (Vec2 p : build_intersection_vertices(map)) {
    if (distance(p, map.u0) <= kVertexMergeTol || distance(p, map.uF) <= kVertexMergeTol) continue;
    points.push_back(p);
  }

  if (same_end) {
    result.feasible = true;
    result.objective_value = 0.0;
    result.total_energy = 0.0;
    return result;
  }

  const auto g = detail::covered_segment_graph(points, map);
  const auto sp = dijkstra(g, 0, 1);
  if (!sp) return result;

  result.feasible = true;
  for (std::size_t i = 0; i + 1 < sp->vertices.size(); ++i)
    result.trajectory.append_leg(points[sp->vertices[i]], points[sp->vertices[i + 1]], top_speed);
  result.objective_value = result.trajectory.total_time;
  return result;
}

}  // namespace uavroute
