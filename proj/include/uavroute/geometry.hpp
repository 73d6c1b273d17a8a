#pragma once

// Disk-union coverage geometry: boundary intersections, exact
// segment-in-coverage tests and coverage connectivity.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <vector>

#include "uavroute/types.hpp"

namespace uavroute {

/// Radial slack (m) granted to every coverage disk. Intersection points are
/// computed, not exact, and must count as covered by both of their disks.
inline constexpr double kCoverageSlack = 1e-9;
/// Gap (in segment parameter units) below which coverage intervals merge.
inline constexpr double kIntervalMergeTol = 1e-12;
/// Relative tolerance on the two-circle discriminant that counts as tangency.
inline constexpr double kTangencyTol = 1e-9;

struct CoverageInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Real intersections of two circle boundaries, in (x, y) order. Tangency
/// yields one point; disjoint, nested or concentric circles yield none.
inline std::vector<Vec2> circle_intersections(Vec2 c1, double r1, Vec2 c2, double r2,
                                              double tol = kTangencyTol) {
  const Vec2 delta = c2 - c1;
  const double d = norm(delta);
  if (d == 0.0) return {};
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h2 = r1 * r1 - a * a;
  const double scale = std::max(r1 * r1, r2 * r2);
  if (h2 < -tol * scale) return {};
  const Vec2 e = (1.0 / d) * delta;
  const Vec2 mid = c1 + a * e;
  if (h2 <= tol * scale) return {mid};
  const double h = std::sqrt(h2);
  const Vec2 perp{-e.y, e.x};
  std::vector<Vec2> pts{mid + h * perp, mid - h * perp};
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// True when `p` lies in base station m's effective disk.
inline bool covered_by(const NetworkMap& map, std::size_t m, Vec2 p) {
  const double r = map.effective_radius(m) + kCoverageSlack;
  const Vec2 f = p - map.stations[m].position;
  return dot(f, f) <= r * r;
}

inline bool is_covered(const NetworkMap& map, Vec2 p) {
  for (std::size_t m = 0; m < map.stations.size(); ++m)
    if (covered_by(map, m, p)) return true;
  return false;
}

/// Sub-interval of [0,1] for which x1 + xi (x2 - x1) lies inside disk m.
inline std::optional<CoverageInterval> chord_interval(Vec2 x1, Vec2 x2, const NetworkMap& map,
                                                      std::size_t m) {
  const Vec2 d = x2 - x1;
  const Vec2 f = x1 - map.stations[m].position;
  const double r = map.effective_radius(m) + kCoverageSlack;
  const double a = dot(d, d);
  const double b = dot(f, d);
  const double c = dot(f, f) - r * r;
  const double disc = b * b - a * c;
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  // Stable roots of a xi^2 + 2 b xi + c = 0.
  const double q = b >= 0.0 ? -(b + s) : -(b - s);
  double lo, hi;
  if (q == 0.0) {
    lo = hi = 0.0;
  } else {
    const double r1 = q / a;
    const double r2 = c / q;
    lo = std::min(r1, r2);
    hi = std::max(r1, r2);
  }
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (lo > hi) return std::nullopt;
  return CoverageInterval{lo, hi};
}

/// Merged, disjoint, ascending parameter intervals of segment x1-x2 that lie
/// inside the coverage union.
inline std::vector<CoverageInterval> segment_coverage_intervals(Vec2 x1, Vec2 x2,
                                                                const NetworkMap& map) {
  std::vector<CoverageInterval> raw;
  raw.reserve(map.stations.size());
  for (std::size_t m = 0; m < map.stations.size(); ++m)
    if (auto iv = chord_interval(x1, x2, map, m)) raw.push_back(*iv);
  std::sort(raw.begin(), raw.end(),
            [](const CoverageInterval& a, const CoverageInterval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<CoverageInterval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi + kIntervalMergeTol)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  return merged;
}

/// True when some point of segment x1-x2 is outside every effective disk.
inline bool has_outage(Vec2 x1, Vec2 x2, const NetworkMap& map) {
  if (x1 == x2) return !is_covered(map, x1);
  // Disks are convex: both ends in one disk settles it.
  for (std::size_t m = 0; m < map.stations.size(); ++m)
    if (covered_by(map, m, x1) && covered_by(map, m, x2)) return false;
  const auto iv = segment_coverage_intervals(x1, x2, map);
  return !(iv.size() == 1 && iv.front().lo <= kIntervalMergeTol &&
           iv.front().hi >= 1.0 - kIntervalMergeTol);
}

/// Stations whose effective disks overlap or touch (the disk-adjacency graph).
inline bool disks_touch(const NetworkMap& map, std::size_t m, std::size_t k) {
  const double reach = map.effective_radius(m) + map.effective_radius(k) + 2 * kCoverageSlack;
  return distance(map.stations[m].position, map.stations[k].position) <= reach;
}

/// True when p and q lie in the same connected component of the coverage
/// union. Breadth-first search over the disk-adjacency graph.
inline bool coverage_connected(Vec2 p, Vec2 q, const NetworkMap& map) {
  const std::size_t M = map.stations.size();
  std::vector<char> seen(M, 0);
  std::deque<std::size_t> frontier;
  for (std::size_t m = 0; m < M; ++m)
    if (covered_by(map, m, p)) {
      seen[m] = 1;
      frontier.push_back(m);
    }
  while (!frontier.empty()) {
    const std::size_t m = frontier.front();
    frontier.pop_front();
    if (covered_by(map, m, q)) return true;
    for (std::size_t k = 0; k < M; ++k)
      if (!seen[k] && disks_touch(map, m, k)) {
        seen[k] = 1;
        frontier.push_back(k);
      }
  }
  return false;
}

/// All pairwise boundary intersections of effective disks that overlap,
/// deduplicated to 1e-6 m and sorted by (x, y). Zero-radius disks are skipped.
inline std::vector<Vec2> build_intersection_vertices(const NetworkMap& map) {
  constexpr double kDedup = 1e-6;
  std::vector<Vec2> out;
  const std::size_t M = map.stations.size();
  for (std::size_t m = 0; m < M; ++m) {
    const double rm = map.effective_radius(m);
    if (rm <= 0.0) continue;
    for (std::size_t k = m + 1; k < M; ++k) {
      const double rk = map.effective_radius(k);
      if (rk <= 0.0) continue;
      if (distance(map.stations[m].position, map.stations[k].position) > rm + rk) continue;
      for (Vec2 p : circle_intersections(map.stations[m].position, rm, map.stations[k].position, rk)) {
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](Vec2 q) { return distance(p, q) <= kDedup; });
        if (!dup) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace uavroute
