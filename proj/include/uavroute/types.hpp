#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace uavroute {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Horizontal position in metres. The UAV flies at a fixed altitude, so all
/// planning happens in the plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Base station: position plus its coverage offset. The effective coverage
/// disk has radius d0 - offset.
struct BaseStation {
  Vec2 position;
  double offset = 0.0;
};

/// Battery swap site. `delay` is the whole dwell (queueing, exchange,
/// landing/take-off penalty); infinity marks the station unavailable.
/// `energy_surcharge` is subtracted from the fresh battery's usable budget to
/// account for descent/ascent when the station sits below cruise altitude.
struct ChargingStation {
  Vec2 position;
  double delay = 0.0;
  double energy_surcharge = 0.0;

  bool available() const { return std::isfinite(delay); }
};

struct NetworkMap {
  double d0 = 0.0;
  std::vector<BaseStation> stations;
  std::vector<ChargingStation> charging;
  Vec2 u0;
  Vec2 uF;
  double altitude = 100.0;
  double charging_altitude = 100.0;

  double effective_radius(std::size_t m) const { return d0 - stations[m].offset; }
};

/// Throws std::invalid_argument naming the first violated map invariant.
inline void validate_map(const NetworkMap& map) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid map: " + what); };
  if (!(map.d0 > 0.0) || !std::isfinite(map.d0)) fail("d0 must be positive and finite");
  if (map.stations.empty()) fail("at least one base station is required");
  for (std::size_t m = 0; m < map.stations.size(); ++m) {
    const auto& bs = map.stations[m];
    if (!std::isfinite(bs.position.x) || !std::isfinite(bs.position.y))
      fail("stations[" + std::to_string(m) + "].position is not finite");
    if (!(bs.offset >= 0.0) || bs.offset > map.d0)
      fail("stations[" + std::to_string(m) + "].lambda must lie in [0, d0]");
  }
  for (std::size_t n = 0; n < map.charging.size(); ++n) {
    const auto& cs = map.charging[n];
    if (!std::isfinite(cs.position.x) || !std::isfinite(cs.position.y))
      fail("charging[" + std::to_string(n) + "].position is not finite");
    if (!(cs.delay >= 0.0)) fail("charging[" + std::to_string(n) + "].tau must be >= 0");
    if (!(cs.energy_surcharge >= 0.0) || !std::isfinite(cs.energy_surcharge))
      fail("charging[" + std::to_string(n) + "].surcharge must be finite and >= 0");
    for (std::size_t k = 0; k < n; ++k)
      if (map.charging[k].position == cs.position)
        fail("charging[" + std::to_string(k) + "] and charging[" + std::to_string(n) +
             "] share a position");
  }
  for (Vec2 p : {map.u0, map.uF})
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail("u0/uF must be finite");
  if (map.charging_altitude > map.altitude) fail("H_CS must not exceed H");
}

// --- trajectories -----------------------------------------------------------

struct FlightLeg {
  Vec2 start;
  Vec2 end;
  double speed = 0.0;

  double length() const { return distance(start, end); }
  double duration() const { return length() / speed; }
};

struct SwapEvent {
  std::size_t station = 0;  ///< index into NetworkMap::charging
  double dwell = 0.0;
};

using TrajectoryEvent = std::variant<FlightLeg, SwapEvent>;

struct Trajectory {
  std::vector<TrajectoryEvent> events;
  double total_time = 0.0;
  double total_distance = 0.0;

  void append_leg(Vec2 a, Vec2 b, double speed) {
    FlightLeg leg{a, b, speed};
    total_distance += leg.length();
    total_time += leg.duration();
    events.emplace_back(leg);
  }
  void append_swap(std::size_t station, double dwell) {
    total_time += dwell;
    events.emplace_back(SwapEvent{station, dwell});
  }
  std::size_t swap_count() const {
    std::size_t n = 0;
    for (const auto& e : events) n += std::holds_alternative<SwapEvent>(e) ? 1 : 0;
    return n;
  }
};

// --- planning results -------------------------------------------------------

/// Global-level vertex numbering used by the battery planners:
/// 0 is u0, 1..N are charging stations 0..N-1, N+1 is uF.
struct GlobalIndex {
  std::size_t charging_count = 0;

  std::size_t start() const { return 0; }
  std::size_t final() const { return charging_count + 1; }
  std::size_t of_station(std::size_t n) const { return n + 1; }
  bool is_station(std::size_t g) const { return g >= 1 && g <= charging_count; }
  std::size_t station_of(std::size_t g) const { return g - 1; }
  std::size_t size() const { return charging_count + 2; }
};

/// Shortest covered path between one ordered pair of global vertices, flown
/// on a single battery.
struct LocalRoute {
  std::size_t from = 0;
  std::size_t to = 0;
  bool connected = false;          ///< endpoints lie in one coverage component
  double length = kInf;            ///< metres; infinite when not connected
  std::vector<Vec2> path;          ///< breakpoints, endpoints included
  std::optional<double> max_speed; ///< fastest speed whose range covers `length`
};

enum class Objective { kTimeUnlimited, kTime, kEnergy };

inline const char* to_string(Objective o) {
  switch (o) {
    case Objective::kTimeUnlimited: return "time-unlimited";
    case Objective::kTime: return "time";
    case Objective::kEnergy: return "energy";
  }
  return "?";
}

struct PlanResult {
  bool feasible = false;
  Objective objective = Objective::kTime;
  double objective_value = kInf;  ///< seconds for time objectives, joules for energy
  double total_energy = kInf;     ///< propulsion energy drawn from batteries (J)
  Trajectory trajectory;
  std::vector<std::size_t> global_sequence;  ///< visited global vertices
  std::vector<LocalRoute> local_routes;
};

}  // namespace uavroute
