#pragma once

// Seeded random maps: stations, charging stations and terminals uniform on
// a square, coverage offsets uniform on [0, lambda_max]. Draws that the
// minimum-time planner cannot serve are rejected.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "uavroute/model.hpp"
#include "uavroute/planner_battery.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

/// 64-bit Mersenne Twister with a fixed integer-to-double mapping, so a seed
/// gives the same stream on every platform.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct MapGenParams {
  std::uint64_t seed = 1;
  std::size_t stations = 10;  ///< M
  std::size_t charging = 3;   ///< N
  double size = 10000.0;      ///< side of the square (m)
  double d0 = 0.0;            ///< 0 derives it from the reference link budget
  double lambda_max = 800.0;
  double tau = 100.0;
  std::size_t max_attempts = 20000;
  UavParams uav = reference_uav();  ///< feasibility is judged for this UAV
};

/// One unconditioned draw from the map distribution.
inline NetworkMap draw_map(const MapGenParams& p, PortableRng& rng) {
  NetworkMap m;
  m.d0 = p.d0 > 0.0 ? p.d0 : *base_coverage_radius(reference_comm());
  for (std::size_t i = 0; i < p.stations; ++i) {
    BaseStation bs;
    bs.position = {rng.uniform(0.0, p.size), rng.uniform(0.0, p.size)};
    bs.offset = rng.uniform(0.0, p.lambda_max);
    m.stations.push_back(bs);
  }
  for (std::size_t n = 0; n < p.charging; ++n) {
    ChargingStation cs;
    cs.position = {rng.uniform(0.0, p.size), rng.uniform(0.0, p.size)};
    cs.delay = p.tau;
    m.charging.push_back(cs);
  }
  m.u0 = {rng.uniform(0.0, p.size), rng.uniform(0.0, p.size)};
  m.uF = {rng.uniform(0.0, p.size), rng.uniform(0.0, p.size)};
  return m;
}

/// First draw from the seeded stream that plan_min_time can serve.
inline std::optional<NetworkMap> generate_map(const MapGenParams& p) {
  if (p.stations < 1) throw std::invalid_argument("at least one station is required");
  if (!(p.size > 0.0) || !(p.lambda_max >= 0.0)) throw std::invalid_argument("bad map size or offset range");
  const double d0 = p.d0 > 0.0 ? p.d0 : *base_coverage_radius(reference_comm());
  if (p.lambda_max > d0) throw std::invalid_argument("lambda_max exceeds d0");
  PortableRng rng(p.seed);
  for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    NetworkMap m = draw_map(p, rng);
    // Cheap rejection before planning.
    if (!coverage_connected(m.u0, m.uF, m)) continue;
    if (plan_min_time(m, p.uav).feasible) return m;
  }
  return std::nullopt;
}

}  // namespace uavroute
