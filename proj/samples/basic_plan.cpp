// Plans a 6 km relay mission that needs one battery swap, then checks it.

#include <cstdio>
#include <variant>

#include "uavroute/uavroute.hpp"

int main() {
  using namespace uavroute;

  NetworkMap map;
  map.d0 = 1200.0;
  for (int k = 0; k < 4; ++k) map.stations.push_back({{2000.0 * k, 0.0}, 0.0});
  map.charging = {{{3000.0, 0.0}, 100.0, 0.0}};
  map.u0 = {0.0, 0.0};
  map.uF = {6000.0, 0.0};

  UavParams uav = reference_uav();
  uav.battery_weight = 0.3;  // about 4 km of range

  const PlanResult plan = plan_min_time(map, uav);
  if (!plan.feasible) {
    std::puts("infeasible");
    return 2;
  }
  std::printf("time %.1f s, distance %.1f m, energy %.0f J, swaps %zu\n", plan.trajectory.total_time,
              plan.trajectory.total_distance, plan.total_energy, plan.trajectory.swap_count());
  for (const auto& e : plan.trajectory.events) {
    if (const auto* leg = std::get_if<FlightLeg>(&e))
      std::printf("  fly (%.0f, %.0f) -> (%.0f, %.0f) at %.0f m/s\n", leg->start.x, leg->start.y, leg->end.x,
                  leg->end.y, leg->speed);
    else
      std::printf("  swap at station %zu, %.0f s\n", std::get<SwapEvent>(e).station, std::get<SwapEvent>(e).dwell);
  }
  const ValidationReport rep = validate_trajectory(map, uav, plan.trajectory);
  std::printf("validator: %s\n", rep.pass ? "pass" : "fail");
  return rep.pass ? 0 : 1;
}
