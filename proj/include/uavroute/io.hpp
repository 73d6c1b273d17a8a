#pragma once

// JSON documents for maps, UAV configurations, plans and validation
// reports. Parsing errors name the offending field. Output is deterministic:
// keys sorted, doubles printed with 17 significant digits, infinities as the
// string "inf".

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "uavroute/model.hpp"
#include "uavroute/payload.hpp"
#include "uavroute/types.hpp"
#include "uavroute/validate.hpp"

namespace uavroute {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

/// Malformed input. what() reads "<field path>: <reason>".
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& path, const std::string& why)
      : std::runtime_error(path + ": " + why), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// --- reading ----------------------------------------------------------------

namespace detail {

inline double number_at(const Json& j, const std::string& path, bool allow_inf = false) {
  if (allow_inf && j.is_string() && j.get<std::string>() == "inf")
    return std::numeric_limits<double>::infinity();
  if (!j.is_number()) throw DocumentError(path, allow_inf ? "expected a number or \"inf\"" : "expected a number");
  return j.get<double>();
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw DocumentError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(path + "." + key, "missing");
  return *it;
}

inline double number_field(const Json& obj, const char* key, const std::string& path,
                           bool allow_inf = false) {
  return number_at(field(obj, key, path), path + "." + key, allow_inf);
}

inline double number_or(const Json& obj, const char* key, const std::string& path, double fallback) {
  return obj.contains(key) ? number_field(obj, key, path) : fallback;
}

inline Vec2 point_field(const Json& obj, const char* key, const std::string& path) {
  const Json& p = field(obj, key, path);
  const std::string sub = path + "." + key;
  return {number_field(p, "x", sub), number_field(p, "y", sub)};
}

inline const Json& array_field(const Json& obj, const char* key, const std::string& path) {
  const Json& a = field(obj, key, path);
  if (!a.is_array()) throw DocumentError(path + "." + key, "expected an array");
  return a;
}

inline std::string index_path(const std::string& path, const char* key, std::size_t i) {
  return path + "." + key + "[" + std::to_string(i) + "]";
}

inline void check_schema(const Json& doc, const std::string& path) {
  if (!doc.is_object()) throw DocumentError(path, "expected an object");
  if (doc.contains("schema")) {
    const Json& s = doc["schema"];
    if (!s.is_number_integer() || s.get<int>() != kSchemaVersion)
      throw DocumentError(path + ".schema", "unsupported schema version");
  }
}

}  // namespace detail

inline CommParams parse_comm(const Json& j, const std::string& path) {
  CommParams c;
  c.uav_altitude = detail::number_or(j, "H", path, c.uav_altitude);
  c.bs_height = detail::number_or(j, "H_BS", path, c.bs_height);
  c.sinr_threshold = detail::number_or(j, "sinr_th", path, c.sinr_threshold);
  c.snr_ref = detail::number_or(j, "snr_ref", path, c.snr_ref);
  c.mu1 = detail::number_or(j, "mu1", path, c.mu1);
  c.mu2 = detail::number_or(j, "mu2", path, c.mu2);
  c.los_excess = detail::number_or(j, "zeta1", path, c.los_excess);
  c.nlos_excess = detail::number_or(j, "zeta2", path, c.nlos_excess);
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(path, e.what());
  }
  return c;
}

/// Reads a UAV block; absent fields take the reference values.
inline UavParams parse_uav(const Json& j, const std::string& path) {
  UavParams u = reference_uav();
  if (!j.is_object()) throw DocumentError(path, "expected an object");
  u.body_weight = detail::number_or(j, "w1", path, u.body_weight);
  u.battery_weight = detail::number_or(j, "w2", path, u.battery_weight);
  u.payload_weight = detail::number_or(j, "w3", path, u.payload_weight);
  if (j.contains("speeds")) {
    const Json& s = detail::array_field(j, "speeds", path);
    u.speeds.clear();
    for (std::size_t i = 0; i < s.size(); ++i)
      u.speeds.push_back(detail::number_at(s[i], detail::index_path(path, "speeds", i)));
  }
  if (j.contains("power")) {
    const Json& p = j["power"];
    const std::string pp = path + ".power";
    auto& w = u.power;
    w.profile_drag = detail::number_or(p, "delta_p", pp, w.profile_drag);
    w.rotors = detail::number_or(p, "N_r", pp, w.rotors);
    w.blades = detail::number_or(p, "N_b", pp, w.blades);
    w.chord = detail::number_or(p, "L_c", pp, w.chord);
    w.rotor_radius = detail::number_or(p, "R_r", pp, w.rotor_radius);
    w.tip_speed = detail::number_or(p, "v_tip", pp, w.tip_speed);
    w.induced_correction = detail::number_or(p, "k_cf", pp, w.induced_correction);
    w.fuselage_area = detail::number_or(p, "S_FP", pp, w.fuselage_area);
    w.air_density = detail::number_or(p, "rho", pp, w.air_density);
    w.gravity = detail::number_or(p, "g", pp, w.gravity);
  }
  if (j.contains("battery")) {
    const Json& b = j["battery"];
    const std::string bp = path + ".battery";
    u.battery.energy_density = detail::number_or(b, "eps_batt", bp, u.battery.energy_density);
    u.battery.depth_of_discharge = detail::number_or(b, "gamma", bp, u.battery.depth_of_discharge);
    u.battery.transfer_ratio = detail::number_or(b, "eta", bp, u.battery.transfer_ratio);
    u.battery.reserve_factor = detail::number_or(b, "r_safe", bp, u.battery.reserve_factor);
  }
  try {
    validate(u);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(path, e.what());
  }
  return u;
}

struct MapDocument {
  NetworkMap map;
  std::optional<CommParams> comm;  ///< present when d0 was derived
  UavParams uav = reference_uav();
};

inline MapDocument parse_map_document(const Json& doc) {
  const std::string root = "map";
  detail::check_schema(doc, root);
  MapDocument out;
  NetworkMap& m = out.map;
  const bool has_d0 = doc.contains("d0");
  const bool has_comm = doc.contains("comm");
  if (has_d0 == has_comm) throw DocumentError(root, "exactly one of \"d0\" and \"comm\" is required");
  if (has_d0) {
    m.d0 = detail::number_field(doc, "d0", root);
  } else {
    out.comm = parse_comm(doc["comm"], root + ".comm");
    const auto d0 = base_coverage_radius(*out.comm);
    if (!d0) throw DocumentError(root + ".comm", "no coverage: SNR threshold unreachable above the station");
    m.d0 = *d0;
    m.altitude = out.comm->uav_altitude;
  }
  m.altitude = detail::number_or(doc, "H", root, m.altitude);
  m.charging_altitude = detail::number_or(doc, "H_CS", root, m.altitude);

  const Json& st = detail::array_field(doc, "stations", root);
  for (std::size_t i = 0; i < st.size(); ++i) {
    const std::string p = detail::index_path(root, "stations", i);
    m.stations.push_back({{detail::number_field(st[i], "x", p), detail::number_field(st[i], "y", p)},
                          detail::number_or(st[i], "lambda", p, 0.0)});
  }
  if (doc.contains("charging")) {
    const Json& cs = detail::array_field(doc, "charging", root);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = detail::index_path(root, "charging", i);
      ChargingStation c;
      c.position = {detail::number_field(cs[i], "x", p), detail::number_field(cs[i], "y", p)};
      c.delay = detail::number_field(cs[i], "tau", p, true);
      c.energy_surcharge = detail::number_or(cs[i], "surcharge", p, 0.0);
      m.charging.push_back(c);
    }
  }
  m.u0 = detail::point_field(doc, "u0", root);
  m.uF = detail::point_field(doc, "uF", root);
  if (doc.contains("uav")) out.uav = parse_uav(doc["uav"], root + ".uav");
  try {
    validate_map(m);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(root, e.what());
  }
  return out;
}

inline Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw DocumentError(file, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DocumentError(file, std::string("not valid JSON: ") + e.what());
  }
}

/// Reads the events of a trajectory document (as written by plan_to_json).
inline Trajectory parse_trajectory(const Json& doc) {
  const std::string root = "trajectory";
  detail::check_schema(doc, root);
  Trajectory t;
  const Json& ev = detail::array_field(doc, "events", root);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const std::string p = detail::index_path(root, "events", i);
    const Json& e = ev[i];
    const Json& type = detail::field(e, "type", p);
    if (type == "leg") {
      const double speed = detail::number_field(e, "speed", p);
      if (!(speed > 0.0)) throw DocumentError(p + ".speed", "must be positive");
      t.append_leg(detail::point_field(e, "start", p), detail::point_field(e, "end", p), speed);
    } else if (type == "swap") {
      const Json& st = detail::field(e, "station", p);
      if (!st.is_number_unsigned()) throw DocumentError(p + ".station", "expected a station index");
      t.append_swap(st.get<std::size_t>(), detail::number_field(e, "tau", p, true));
    } else {
      throw DocumentError(p + ".type", "expected \"leg\" or \"swap\"");
    }
  }
  // Reported totals are kept as written so the validator can check them.
  if (doc.contains("total_time")) t.total_time = detail::number_field(doc, "total_time", root);
  if (doc.contains("total_distance")) t.total_distance = detail::number_field(doc, "total_distance", root);
  return t;
}

// --- writing ----------------------------------------------------------------

inline Json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline Json point_json(Vec2 p) { return Json{{"x", p.x}, {"y", p.y}}; }

inline Json map_to_json(const NetworkMap& m, const std::optional<UavParams>& uav = std::nullopt) {
  Json doc{{"schema", kSchemaVersion}, {"d0", m.d0}, {"H", m.altitude}, {"H_CS", m.charging_altitude},
           {"u0", point_json(m.u0)}, {"uF", point_json(m.uF)}};
  Json st = Json::array();
  for (const auto& s : m.stations) st.push_back({{"x", s.position.x}, {"y", s.position.y}, {"lambda", s.offset}});
  doc["stations"] = st;
  Json cs = Json::array();
  for (const auto& c : m.charging) {
    Json e{{"x", c.position.x}, {"y", c.position.y}, {"tau", number(c.delay)}};
    if (c.energy_surcharge != 0.0) e["surcharge"] = c.energy_surcharge;
    cs.push_back(e);
  }
  doc["charging"] = cs;
  if (uav) {
    Json speeds = Json::array();
    for (double v : uav->speeds) speeds.push_back(v);
    doc["uav"] = {{"w1", uav->body_weight}, {"w2", uav->battery_weight}, {"w3", uav->payload_weight},
                  {"speeds", speeds}};
  }
  return doc;
}

inline Json plan_to_json(const PlanResult& r, const UavParams& uav) {
  Json doc{{"schema", kSchemaVersion},
           {"feasible", r.feasible},
           {"objective", to_string(r.objective)},
           {"objective_value", number(r.objective_value)},
           {"total_time", number(r.feasible ? r.trajectory.total_time : kInf)},
           {"total_distance", number(r.feasible ? r.trajectory.total_distance : kInf)},
           {"total_energy", number(r.total_energy)},
           {"swaps", r.trajectory.swap_count()}};
  Json seq = Json::array();
  for (std::size_t g : r.global_sequence) seq.push_back(g);
  doc["global_sequence"] = seq;
  Json events = Json::array();
  for (const auto& e : r.trajectory.events) {
    if (const auto* leg = std::get_if<FlightLeg>(&e)) {
      events.push_back({{"type", "leg"},
                        {"start", point_json(leg->start)},
                        {"end", point_json(leg->end)},
                        {"speed", leg->speed},
                        {"time", leg->duration()},
                        {"energy", leg_energy(leg->length(), leg->speed, uav)}});
    } else {
      const auto& s = std::get<SwapEvent>(e);
      events.push_back({{"type", "swap"}, {"station", s.station}, {"tau", number(s.dwell)}});
    }
  }
  doc["events"] = events;
  Json routes = Json::array();
  for (const auto& lr : r.local_routes) {
    Json j{{"from", lr.from}, {"to", lr.to}, {"connected", lr.connected}, {"length", number(lr.length)}};
    j["v_max"] = lr.max_speed ? Json(*lr.max_speed) : Json(nullptr);
    routes.push_back(j);
  }
  doc["local_routes"] = routes;
  return doc;
}

inline Json constraint_json(const ConstraintResult& c) {
  Json j{{"pass", c.pass}};
  if (!c.pass) {
    j["event"] = *c.event;
    j["message"] = c.message;
  }
  return j;
}

inline Json report_to_json(const ValidationReport& r) {
  return Json{{"pass", r.pass},
              {"endpoints", constraint_json(r.endpoints)},
              {"connectivity", constraint_json(r.connectivity)},
              {"speeds", constraint_json(r.speeds)},
              {"battery", constraint_json(r.battery)},
              {"swaps", constraint_json(r.swaps)},
              {"totals", constraint_json(r.totals)},
              {"worst_connectivity_margin", number(r.worst_connectivity_margin)},
              {"min_battery_margin", number(r.min_battery_margin)}};
}

inline Json payload_to_json(const PayloadResult& r) {
  Json j{{"schema", kSchemaVersion}, {"feasible", r.feasible}, {"w3", r.payload}, {"k", r.steps}};
  if (r.bottleneck)
    j["bottleneck"] = {{"from", r.bottleneck->a}, {"to", r.bottleneck->b}, {"length", r.bottleneck->length}};
  else
    j["bottleneck"] = nullptr;
  return j;
}

/// Formats a double with 17 significant digits (exact round trip).
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void emit(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        emit(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], out, indent, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Serialises with sorted keys, two-space indent and a trailing newline.
inline std::string to_text(const Json& j) {
  std::string out;
  detail::emit(j, out, 2, 0);
  out += "\n";
  return out;
}

}  // namespace uavroute
