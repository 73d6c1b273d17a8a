#pragma once

// Maximum deliverable payload. A payload is deliverable iff some u0-uF route
// in the station graph has every hop within one battery's range, so only the
// minimax hop length (the bottleneck) matters.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "uavroute/model.hpp"
#include "uavroute/planner_battery.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

struct UndirectedEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double length = 0.0;
};

struct BottleneckEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double length = 0.0;
};

namespace detail {

inline bool connected_in(std::size_t n, const std::vector<UndirectedEdge>& edges,
                         const std::vector<char>& alive, std::size_t s, std::size_t t) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (alive[e]) {
      adj[edges[e].a].push_back(edges[e].b);
      adj[edges[e].b].push_back(edges[e].a);
    }
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    if (u == t) return true;
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        q.push_back(v);
      }
  }
  return false;
}

}  // namespace detail

/// Longest edge whose removal (after removing every longer edge) cuts s from
/// t. Equals the minimax edge length over all s-t paths. Empty when s and t
/// are disconnected. Ties in length go to the smallest (a, b) pair first.
inline std::optional<BottleneckEdge> bottleneck_edge(std::size_t vertex_count,
                                                     std::vector<UndirectedEdge> edges,
                                                     std::size_t s, std::size_t t) {
  if (s >= vertex_count || t >= vertex_count) throw std::out_of_range("bottleneck endpoint");
  for (auto& e : edges) {
    if (e.a >= vertex_count || e.b >= vertex_count) throw std::out_of_range("bottleneck edge");
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  if (s == t) return BottleneckEdge{s, t, 0.0};
  std::vector<char> alive(edges.size(), 1);
  if (!detail::connected_in(vertex_count, edges, alive, s, t)) return std::nullopt;

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& ex = edges[x];
    const auto& ey = edges[y];
    if (ex.length != ey.length) return ex.length > ey.length;
    return std::tie(ex.a, ex.b, x) < std::tie(ey.a, ey.b, y);
  });
  for (std::size_t e : order) {
    alive[e] = 0;
    if (!detail::connected_in(vertex_count, edges, alive, s, t))
      return BottleneckEdge{edges[e].a, edges[e].b, edges[e].length};
  }
  return std::nullopt;  // unreachable: s != t needs at least one edge
}

/// Bottleneck over the station graph built from connected local routes
/// (battery ignored). Both directions of a pair collapse to one edge.
inline std::optional<BottleneckEdge> bottleneck_edge(const std::vector<LocalRoute>& routes,
                                                     const GlobalIndex& idx) {
  std::vector<UndirectedEdge> edges;
  for (const auto& r : routes) {
    if (!r.connected) continue;
    const std::size_t a = std::min(r.from, r.to);
    const std::size_t b = std::max(r.from, r.to);
    auto it = std::find_if(edges.begin(), edges.end(),
                           [&](const UndirectedEdge& e) { return e.a == a && e.b == b; });
    if (it == edges.end())
      edges.push_back({a, b, r.length});
    else
      it->length = std::min(it->length, r.length);
  }
  return bottleneck_edge(idx.size(), std::move(edges), idx.start(), idx.final());
}

struct PayloadQuery {
  double eps_w = 0.1;
  std::size_t k_max = 50;
  NetworkMap map;
  UavParams uav;  ///< payload_weight is ignored
};

struct PayloadResult {
  bool feasible = false;
  double payload = 0.0;  ///< kg, k * eps_w
  std::size_t steps = 0;  ///< k
  std::optional<BottleneckEdge> bottleneck;
};

/// True when the UAV carrying `w3` can cross a hop of length `length`.
inline bool can_cross(double length, double w3, const UavParams& uav) {
  UavParams u = uav;
  u.payload_weight = w3;
  return max_feasible_speed(length, u).feasible;
}

/// Largest w3 in {0, eps_w, ..., k_max eps_w} that can be delivered.
/// Infeasible when u0 and uF are disconnected or even w3 = 0 fails.
inline PayloadResult max_payload(const PayloadQuery& q) {
  if (!(q.eps_w > 0.0) || !std::isfinite(q.eps_w)) throw std::invalid_argument("eps_w must be positive");
  if (q.k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  validate_map(q.map);
  UavParams uav = q.uav;
  uav.payload_weight = 0.0;
  validate(uav);
  for (const auto& cs : q.map.charging)
    if (cs.energy_surcharge != 0.0)
      throw std::invalid_argument("payload search requires zero charging-station surcharges");

  const EdgeSets sets = precompute_edge_sets(q.map);
  PayloadResult out;
  out.bottleneck = bottleneck_edge(compute_local_routes(q.map, uav, sets), sets.index);
  if (!out.bottleneck) return out;
  const double len = out.bottleneck->length;
  if (!can_cross(len, 0.0, uav)) return out;
  out.feasible = true;
  for (std::size_t k = 1; k <= q.k_max; ++k) {
    const double w3 = static_cast<double>(k) * q.eps_w;
    if (!can_cross(len, w3, uav)) break;
    out.steps = k;
    out.payload = w3;
  }
  return out;
}

}  // namespace uavroute
