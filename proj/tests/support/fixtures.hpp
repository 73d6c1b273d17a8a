#pragma once

// Hand-built maps and UAV configurations shared by the unit and acceptance
// tests.

#include <cstdint>
#include <vector>

#include "uavroute/uavroute.hpp"

namespace fixture {

using namespace uavroute;

/// One disk of radius 1000 m; both terminals inside it.
inline NetworkMap single_disk() {
  NetworkMap m;
  m.d0 = 1000.0;
  m.stations = {{{0.0, 0.0}, 0.0}};
  m.u0 = {-300.0, 0.0};
  m.uF = {400.0, 100.0};
  return m;
}

/// Two radius-1000 disks 1500 m apart. The straight u0-uF segment crosses
/// the gap above the lens, so the route must bend at (750, 661.4).
inline NetworkMap two_disk_detour() {
  NetworkMap m;
  m.d0 = 1000.0;
  m.stations = {{{0.0, 0.0}, 0.0}, {{1500.0, 0.0}, 0.0}};
  m.u0 = {-200.0, 800.0};
  m.uF = {1700.0, 800.0};
  return m;
}

/// Four disks along the x axis; a station halfway. Used with short_range_uav
/// so the 6 km trip needs exactly one swap.
inline NetworkMap relay_line() {
  NetworkMap m;
  m.d0 = 1200.0;
  for (int k = 0; k < 4; ++k) m.stations.push_back({{2000.0 * k, 0.0}, 0.0});
  m.u0 = {0.0, 0.0};
  m.uF = {6000.0, 0.0};
  m.charging = {{{3000.0, 0.0}, 100.0, 0.0}};
  return m;
}

/// Range tops out near 4 km (w2 = 0.3 kg).
inline UavParams short_range_uav() {
  UavParams u = reference_uav();
  u.battery_weight = 0.3;
  return u;
}

/// Range tops out near 1.2 km (w2 = 0.08 kg); for small random maps.
inline UavParams tiny_battery_uav() {
  UavParams u = reference_uav();
  u.battery_weight = 0.08;
  return u;
}

/// Random maps at one fifth of the reference scale (2 km square, d0 = 297 m,
/// offsets up to 160 m) that the tiny-battery UAV can serve.
inline NetworkMap small_random_map(std::uint64_t seed, std::size_t M, std::size_t N,
                                   const UavParams& uav = tiny_battery_uav()) {
  MapGenParams p;
  p.seed = seed;
  p.stations = M;
  p.charging = N;
  p.size = 2000.0;
  p.d0 = 1484.6 / 5.0;
  p.lambda_max = 160.0;
  p.uav = uav;
  auto m = generate_map(p);
  if (!m) throw std::runtime_error("no feasible small map");
  return *m;
}

/// A winding chain of overlapping disks with terminals near the two ends and
/// stations dropped near random chain disks. With the tiny-battery UAV most
/// of these need one or more swaps. Draws the UAV cannot serve are skipped.
inline NetworkMap chain_map(std::uint64_t seed, std::size_t M, std::size_t N,
                            const UavParams& uav = tiny_battery_uav()) {
  PortableRng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    NetworkMap m;
    m.d0 = 300.0;
    Vec2 at{0.0, 0.0};
    double heading = rng.uniform(0.0, 6.283185307179586);
    for (std::size_t k = 0; k < M; ++k) {
      const double lambda = rng.uniform(0.0, 100.0);
      if (k > 0) {
        const double reach = (m.d0 - lambda) + m.effective_radius(k - 1);
        const double hop = rng.uniform(0.5, 0.9) * reach;
        heading += rng.uniform(-1.0, 1.0);
        at = at + hop * Vec2{std::cos(heading), std::sin(heading)};
      }
      m.stations.push_back({at, lambda});
    }
    auto inside = [&](std::size_t k) {
      const double r = 0.5 * m.effective_radius(k) * rng.uniform();
      const double a = rng.uniform(0.0, 6.283185307179586);
      return m.stations[k].position + r * Vec2{std::cos(a), std::sin(a)};
    };
    m.u0 = inside(0);
    m.uF = inside(M - 1);
    for (std::size_t n = 0; n < N; ++n) {
      const auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(M));
      m.charging.push_back({inside(std::min(k, M - 1)), rng.uniform(20.0, 200.0), 0.0});
    }
    bool distinct = true;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < a; ++b) distinct = distinct && !(m.charging[a].position == m.charging[b].position);
    if (distinct && plan_min_time(m, uav).feasible) return m;
  }
  throw std::runtime_error("no feasible chain map");
}

inline double leg_length_sum(const Trajectory& t) {
  double s = 0.0;
  for (const auto& e : t.events)
    if (const auto* leg = std::get_if<FlightLeg>(&e)) s += leg->length();
  return s;
}

inline std::vector<Vec2> breakpoints(const Trajectory& t) {
  std::vector<Vec2> out;
  for (const auto& e : t.events)
    if (const auto* leg = std::get_if<FlightLeg>(&e)) {
      if (out.empty()) out.push_back(leg->start);
      out.push_back(leg->end);
    }
  return out;
}

}  // namespace fixture
