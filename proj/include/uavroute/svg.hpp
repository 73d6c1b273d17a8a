#pragma once

// Static SVG 1.1 rendering of a map and, optionally, a trajectory.
// Map y grows upward, SVG y grows downward, so y is negated on output.

#include <algorithm>
#include <cstdio>
#include <string>
#include <variant>

#include "uavroute/types.hpp"

namespace uavroute {

namespace detail {

inline std::string fmt3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);  // no "-0.000"
  return buf;
}

}  // namespace detail

inline std::string render_svg(const NetworkMap& map, const Trajectory* traj = nullptr) {
  using detail::fmt3;
  double lox = std::min(map.u0.x, map.uF.x), hix = std::max(map.u0.x, map.uF.x);
  double loy = std::min(map.u0.y, map.uF.y), hiy = std::max(map.u0.y, map.uF.y);
  for (std::size_t m = 0; m < map.stations.size(); ++m) {
    const Vec2 c = map.stations[m].position;
    const double r = map.effective_radius(m);
    lox = std::min(lox, c.x - r);
    hix = std::max(hix, c.x + r);
    loy = std::min(loy, c.y - r);
    hiy = std::max(hiy, c.y + r);
  }
  for (const auto& cs : map.charging) {
    lox = std::min(lox, cs.position.x);
    hix = std::max(hix, cs.position.x);
    loy = std::min(loy, cs.position.y);
    hiy = std::max(hiy, cs.position.y);
  }
  const double span = std::max({hix - lox, hiy - loy, 1.0});
  const double pad = 0.03 * span;
  const double mark = 0.006 * span;
  const double line = 0.002 * span;
  lox -= pad;
  loy -= pad;
  hix += pad;
  hiy += pad;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" +
       fmt3(800.0 * (hiy - loy) / (hix - lox)) + "\" viewBox=\"" + fmt3(lox) + " " + fmt3(-hiy) + " " +
       fmt3(hix - lox) + " " + fmt3(hiy - loy) + "\">\n";
  s += "<rect x=\"" + fmt3(lox) + "\" y=\"" + fmt3(-hiy) + "\" width=\"" + fmt3(hix - lox) +
       "\" height=\"" + fmt3(hiy - loy) + "\" fill=\"white\"/>\n";

  s += "<g id=\"coverage\" fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#4a90d9\" stroke-width=\"" +
       fmt3(line) + "\">\n";
  for (std::size_t m = 0; m < map.stations.size(); ++m)
    s += "<circle cx=\"" + fmt3(map.stations[m].position.x) + "\" cy=\"" + fmt3(-map.stations[m].position.y) +
         "\" r=\"" + fmt3(map.effective_radius(m)) + "\"/>\n";
  s += "</g>\n<g id=\"stations\" fill=\"#1f3b73\">\n";
  for (const auto& bs : map.stations)
    s += "<rect x=\"" + fmt3(bs.position.x - mark / 2) + "\" y=\"" + fmt3(-bs.position.y - mark / 2) +
         "\" width=\"" + fmt3(mark) + "\" height=\"" + fmt3(mark) + "\"/>\n";
  s += "</g>\n<g id=\"charging\">\n";
  for (const auto& cs : map.charging) {
    const double x = cs.position.x, y = -cs.position.y;
    s += "<polygon points=\"" + fmt3(x) + "," + fmt3(y - mark) + " " + fmt3(x - mark) + "," + fmt3(y + mark) +
         " " + fmt3(x + mark) + "," + fmt3(y + mark) + "\" fill=\"" +
         (cs.available() ? "#2e9d48" : "#999999") + "\"/>\n";
  }
  s += "</g>\n";

  if (traj) {
    Vec2 here = map.u0;
    std::string pts = fmt3(here.x) + "," + fmt3(-here.y);
    std::string swaps;
    for (const auto& e : traj->events) {
      if (const auto* leg = std::get_if<FlightLeg>(&e)) {
        here = leg->end;
        pts += " " + fmt3(here.x) + "," + fmt3(-here.y);
      } else {
        swaps += "<circle cx=\"" + fmt3(here.x) + "\" cy=\"" + fmt3(-here.y) + "\" r=\"" + fmt3(1.5 * mark) +
                 "\" fill=\"none\" stroke=\"#e67e22\" stroke-width=\"" + fmt3(line) + "\"/>\n";
      }
    }
    s += "<polyline id=\"trajectory\" points=\"" + pts + "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" +
         fmt3(1.5 * line) + "\"/>\n";
    s += "<g id=\"swaps\">\n" + swaps + "</g>\n";
  }

  s += "<circle id=\"u0\" cx=\"" + fmt3(map.u0.x) + "\" cy=\"" + fmt3(-map.u0.y) + "\" r=\"" + fmt3(mark) +
       "\" fill=\"black\"/>\n";
  s += "<circle id=\"uF\" cx=\"" + fmt3(map.uF.x) + "\" cy=\"" + fmt3(-map.uF.y) + "\" r=\"" + fmt3(mark) +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt3(line) + "\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace uavroute
