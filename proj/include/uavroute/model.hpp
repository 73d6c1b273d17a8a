#pragma once

// Rotary-wing propulsion power, battery range and the air-to-ground link
// budget that fixes the base coverage radius.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavroute {

struct PowerParams {
  double profile_drag = 0.012;      // delta_p
  double rotors = 4;                // N_r
  double blades = 4;                // N_b per rotor
  double chord = 0.0157;            // L_c, m
  double rotor_radius = 0.07;       // R_r, m
  double tip_speed = 14.0;          // v_tip, m/s
  double induced_correction = 0.1;  // k_cf
  double fuselage_area = 0.03;      // S_FP, m^2
  double air_density = 1.225;       // rho, kg/m^3
  double gravity = 9.807;           // g, m/s^2
};

struct BatteryParams {
  double energy_density = 540e3;  // J/kg
  double depth_of_discharge = 0.7;
  double transfer_ratio = 0.7;  // eta
  double reserve_factor = 1.2;  // r_safe
};

struct UavParams {
  double body_weight = 1.07;     // w1, kg
  double battery_weight = 0.9;   // w2, kg
  double payload_weight = 1.0;   // w3, kg
  std::vector<double> speeds;    // ascending, starts at 0
  PowerParams power;
  BatteryParams battery;

  double total_weight() const { return body_weight + battery_weight + payload_weight; }
  double max_speed() const { return speeds.back(); }
};

/// Air-to-ground channel parameters. Angles are in degrees.
struct CommParams {
  double uav_altitude = 100.0;  // H
  double bs_height = 35.0;      // H_BS
  double sinr_threshold = 12.0;  // dB
  double snr_ref = 95.0;         // dB at 1 m, free space
  double mu1 = 4.880;
  double mu2 = 0.429;
  double los_excess = 0.1;   // zeta1, dB
  double nlos_excess = 21.0;  // zeta2, dB
};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

inline void validate(const PowerParams& p) {
  for (double f : {p.profile_drag, p.rotors, p.blades, p.chord, p.rotor_radius, p.tip_speed,
                   p.induced_correction, p.fuselage_area, p.air_density, p.gravity})
    detail::require(std::isfinite(f) && f > 0.0, "power parameters must be finite and positive");
}

inline void validate(const BatteryParams& b) {
  detail::require(std::isfinite(b.energy_density) && b.energy_density > 0.0,
                  "battery.energy_density must be positive");
  detail::require(b.depth_of_discharge > 0.0 && b.depth_of_discharge < 1.0,
                  "battery.depth_of_discharge must lie in (0,1)");
  detail::require(b.transfer_ratio > 0.0 && b.transfer_ratio < 1.0,
                  "battery.transfer_ratio must lie in (0,1)");
  detail::require(std::isfinite(b.reserve_factor) && b.reserve_factor > 1.0,
                  "battery.reserve_factor must exceed 1");
}

inline void validate(const UavParams& u) {
  detail::require(std::isfinite(u.body_weight) && u.body_weight > 0.0, "w1 must be positive");
  detail::require(std::isfinite(u.battery_weight) && u.battery_weight > 0.0,
                  "w2 must be positive");
  detail::require(std::isfinite(u.payload_weight) && u.payload_weight >= 0.0,
                  "w3 must be non-negative");
  detail::require(u.speeds.size() >= 2 && u.speeds.front() == 0.0,
                  "speed set must contain 0 and at least one positive speed");
  for (std::size_t i = 1; i < u.speeds.size(); ++i)
    detail::require(std::isfinite(u.speeds[i]) && u.speeds[i] > u.speeds[i - 1],
                    "speed set must be strictly ascending");
  validate(u.power);
  validate(u.battery);
}

inline void validate(const CommParams& c) {
  detail::require(c.uav_altitude > c.bs_height && c.bs_height >= 0.0, "require H > H_BS >= 0");
  detail::require(c.nlos_excess >= c.los_excess && c.los_excess >= 0.0,
                  "require zeta2 >= zeta1 >= 0");
  detail::require(c.mu1 > 0.0 && c.mu2 > 0.0, "mu1 and mu2 must be positive");
}

// --- propulsion -------------------------------------------------------------

/// Blade profile power at hover.
inline double blade_profile_power(const PowerParams& p) {
  return p.profile_drag * p.air_density / 8.0 * p.rotors * p.blades * p.chord * p.rotor_radius *
         std::pow(p.tip_speed, 3);
}

inline double total_disc_area_term(const PowerParams& p) {
  return 2.0 * p.air_density * p.rotors * std::numbers::pi * p.rotor_radius * p.rotor_radius;
}

/// Induced power at hover for total weight `w` (kg).
inline double induced_power(double w, const PowerParams& p) {
  return (1.0 + p.induced_correction) * std::pow(w * p.gravity, 1.5) /
         std::sqrt(total_disc_area_term(p));
}

/// Mean rotor induced velocity at hover.
inline double hover_induced_speed(double w, const PowerParams& p) {
  return std::sqrt(w * p.gravity / total_disc_area_term(p));
}

/// Propulsion power (W) at forward speed `v` with total weight `w`.
inline double propulsion_power(double v, double w, const PowerParams& p) {
  if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("speed must be finite and >= 0");
  if (!std::isfinite(w) || w <= 0.0) throw std::invalid_argument("weight must be finite and > 0");
  const double p1 = blade_profile_power(p);
  const double p2 = induced_power(w, p);
  const double r = v / hover_induced_speed(w, p);
  const double r2 = r * r;
  // sqrt(1 + r^4/4) - r^2/2 rewritten to avoid cancellation at high speed.
  const double induced_factor = 1.0 / (std::sqrt(1.0 + 0.25 * r2 * r2) + 0.5 * r2);
  const double t = v / p.tip_speed;
  return p1 * (1.0 + 3.0 * t * t) + p2 * std::sqrt(induced_factor) +
         0.5 * p.fuselage_area * p.air_density * v * v * v;
}

inline double propulsion_power(double v, const UavParams& u) {
  return propulsion_power(v, u.total_weight(), u.power);
}

// --- battery ----------------------------------------------------------------

inline double battery_capacity(double battery_weight, const BatteryParams& b) {
  return b.energy_density * battery_weight;
}

/// Energy one fresh battery may spend before hitting its reserve floor (J).
inline double usable_energy(double battery_weight, const BatteryParams& b) {
  return b.depth_of_discharge * battery_capacity(battery_weight, b) / b.reserve_factor;
}

inline double usable_energy(const UavParams& u) {
  return usable_energy(u.battery_weight, u.battery);
}

/// Battery energy drawn per metre at speed v > 0.
inline double energy_per_metre(double v, const UavParams& u) {
  return propulsion_power(v, u) / (u.battery.transfer_ratio * v);
}

/// Energy drawn from the battery to fly `length` metres at constant speed v.
inline double leg_energy(double length, double v, const UavParams& u) {
  return length / v * propulsion_power(v, u) / u.battery.transfer_ratio;
}

/// Range on one battery at constant speed `v`, total weight `w`, battery
/// weight `w2`. Zero speed goes nowhere.
inline double max_flight_distance(double v, double w, double w2, const UavParams& u) {
  if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("speed must be finite and >= 0");
  if (v == 0.0) return 0.0;
  return v * u.battery.transfer_ratio * usable_energy(w2, u.battery) / propulsion_power(v, w, u.power);
}

inline double max_flight_distance(double v, const UavParams& u) {
  return max_flight_distance(v, u.total_weight(), u.battery_weight, u);
}

/// Speed in the set that minimises energy per metre; ties go to the faster
/// speed.
inline double most_efficient_speed(const UavParams& u) {
  double best_v = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (double v : u.speeds) {
    if (v <= 0.0) continue;
    const double e = energy_per_metre(v, u);
    if (e <= best) {
      best = e;
      best_v = v;
    }
  }
  return best_v;
}

// --- link budget ------------------------------------------------------------

inline double los_probability(double elevation_deg, const CommParams& c) {
  return 1.0 / (1.0 + c.mu1 * std::exp(-c.mu2 * (elevation_deg - c.mu1)));
}

/// Expected SNR (dB) at horizontal distance r from a base station, averaging
/// the excess loss over the LoS probability.
inline double expected_snr(double r, const CommParams& c) {
  if (!(r >= 0.0)) throw std::invalid_argument("horizontal distance must be >= 0");
  const double dh = c.uav_altitude - c.bs_height;
  const double d3 = std::hypot(r, dh);
  const double theta = r == 0.0 ? 90.0 : std::atan2(dh, r) * 180.0 / std::numbers::pi;
  const double p = los_probability(theta, c);
  return c.snr_ref - 20.0 * std::log10(d3) - (p * c.los_excess + (1.0 - p) * c.nlos_excess);
}

/// Horizontal distance at which the expected SNR falls to the threshold.
/// Empty when even the point straight above the station misses it.
inline std::optional<double> base_coverage_radius(const CommParams& c) {
  validate(c);
  if (expected_snr(0.0, c) < c.sinr_threshold) return std::nullopt;
  double lo = 0.0;
  double hi = 1e6;
  if (expected_snr(hi, c) >= c.sinr_threshold) return hi;
  for (int i = 0; i < 200 && hi - lo > 1e-3; ++i) {
    const double mid = 0.5 * (lo + hi);
    (expected_snr(mid, c) >= c.sinr_threshold ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// --- golden configurations --------------------------------------------------

/// Speeds 0, step, 2*step, ..., vmax.
inline std::vector<double> uniform_speed_set(double step, double vmax) {
  std::vector<double> s;
  for (int k = 0; k * step <= vmax + 1e-9; ++k) s.push_back(k * step);
  return s;
}

/// Quadcopter of the reference scenario: w = 2.97 kg, speeds 0..30 m/s.
inline UavParams reference_uav() {
  UavParams u;
  u.speeds = uniform_speed_set(1.0, 30.0);
  return u;
}

inline CommParams reference_comm() { return CommParams{}; }

}  // namespace uavroute
