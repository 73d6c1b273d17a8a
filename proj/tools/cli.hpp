#pragma once

// Command-line front end. Exit codes: 0 success, 1 input error, 2 the plan
// (or payload, or validation) came out infeasible.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavroute/io.hpp"
#include "uavroute/svg.hpp"
#include "uavroute/uavroute.hpp"

namespace uavroute::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;

namespace detail {

inline void write_out(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DocumentError(path, "cannot write file");
  f << text;
}

inline Objective parse_objective(const std::string& s) {
  if (s == "time") return Objective::kTime;
  if (s == "time-unlimited") return Objective::kTimeUnlimited;
  if (s == "energy") return Objective::kEnergy;
  throw DocumentError("--objective", "expected time, time-unlimited or energy");
}

inline SweepVariable parse_variable(const std::string& s) {
  for (auto v : {SweepVariable::kTau, SweepVariable::kBatteryWeight, SweepVariable::kPayload,
                 SweepVariable::kFixedSpeed, SweepVariable::kUnavailable})
    if (s == to_string(v)) return v;
  throw DocumentError("--variable", "expected tau, w2, w3, v_fix or unavailable");
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"uavroute: coverage- and battery-constrained UAV trajectory planning"};
  app.require_subcommand(1);

  std::string map_file, traj_file, out_file, objective = "time";
  std::optional<double> w2, w3;

  auto* coverage = app.add_subcommand("coverage", "print the base coverage radius d0");
  coverage->add_option("--map", map_file, "map document (uses the reference link budget if omitted)");

  auto* plan = app.add_subcommand("plan", "plan a trajectory");
  plan->add_option("--map", map_file, "map document")->required();
  plan->add_option("--objective", objective, "time | time-unlimited | energy");
  plan->add_option("--w2", w2, "override battery weight (kg)");
  plan->add_option("--w3", w3, "override payload weight (kg)");
  plan->add_option("--out", out_file, "output file (default stdout)");

  double eps_w = 0.1;
  std::size_t k_max = 50;
  auto* payload = app.add_subcommand("payload", "maximum deliverable payload");
  payload->add_option("--map", map_file, "map document")->required();
  payload->add_option("--eps-w", eps_w, "payload step (kg)");
  payload->add_option("--k-max", k_max, "maximum number of steps");
  payload->add_option("--w2", w2, "override battery weight (kg)");
  payload->add_option("--out", out_file, "output file (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "check a trajectory document against a map");
  validate_cmd->add_option("--map", map_file, "map document")->required();
  validate_cmd->add_option("--trajectory", traj_file, "trajectory document")->required();
  validate_cmd->add_option("--w2", w2, "override battery weight (kg)");
  validate_cmd->add_option("--w3", w3, "override payload weight (kg)");
  validate_cmd->add_option("--out", out_file, "output file (default stdout)");

  auto* plot = app.add_subcommand("plot", "render the map (and a trajectory) as SVG");
  plot->add_option("--map", map_file, "map document")->required();
  plot->add_option("--trajectory", traj_file, "trajectory document");
  plot->add_option("--out", out_file, "output file (default stdout)");

  MapGenParams gen_params;
  auto* gen = app.add_subcommand("gen", "generate a random feasible map");
  gen->add_option("--seed", gen_params.seed, "random seed");
  gen->add_option("--M", gen_params.stations, "number of base stations");
  gen->add_option("--N", gen_params.charging, "number of charging stations");
  gen->add_option("--size", gen_params.size, "side of the square region (m)");
  gen->add_option("--tau", gen_params.tau, "swap delay of every charging station (s)");
  gen->add_option("--w2", w2, "battery weight the map must be feasible for (kg)");
  gen->add_option("--w3", w3, "payload weight the map must be feasible for (kg)");
  gen->add_option("--out", out_file, "output file (default stdout)");

  std::string variable = "w3";
  std::vector<double> values;
  std::size_t station = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "plan once per value of a swept parameter");
  sweep_cmd->add_option("--map", map_file, "map document")->required();
  sweep_cmd->add_option("--variable", variable, "tau | w2 | w3 | v_fix | unavailable");
  sweep_cmd->add_option("--values", values, "values to sweep")->required()->delimiter(',');
  sweep_cmd->add_option("--station", station, "charging station swept by tau");
  sweep_cmd->add_option("--objective", objective, "time | time-unlimited | energy");
  sweep_cmd->add_option("--out", out_file, "output file (default stdout)");

  std::vector<std::size_t> Ms{5, 10, 20}, Ns{2};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  double size = 5000.0;
  auto* scale = app.add_subcommand("scale", "runtime scaling probe");
  scale->add_option("--M", Ms, "station counts")->delimiter(',');
  scale->add_option("--N", Ns, "charging station counts")->delimiter(',');
  scale->add_option("--reps", reps, "maps per size");
  scale->add_option("--seed", seed, "random seed");
  scale->add_option("--size", size, "side of the square region (m)");
  scale->add_option("--out", out_file, "output file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  auto load = [&]() {
    MapDocument doc = parse_map_document(read_json_file(map_file));
    if (w2) doc.uav.battery_weight = *w2;
    if (w3) doc.uav.payload_weight = *w3;
    try {
      validate(doc.uav);
    } catch (const std::invalid_argument& e) {
      throw DocumentError("--w2/--w3", e.what());
    }
    return doc;
  };

  try {
    if (*coverage) {
      double d0;
      if (map_file.empty()) {
        d0 = *base_coverage_radius(reference_comm());
      } else {
        d0 = load().map.d0;
      }
      out << format_double(d0) << "\n";
      return kExitOk;
    }
    if (*plan) {
      const MapDocument doc = load();
      const PlanResult r = run_objective(doc.map, doc.uav, detail::parse_objective(objective));
      detail::write_out(out_file, to_text(plan_to_json(r, doc.uav)), out);
      return r.feasible ? kExitOk : kExitInfeasible;
    }
    if (*payload) {
      const MapDocument doc = load();
      PayloadQuery q{eps_w, k_max, doc.map, doc.uav};
      PayloadResult r;
      try {
        r = max_payload(q);
      } catch (const std::invalid_argument& e) {
        throw DocumentError("payload", e.what());
      }
      detail::write_out(out_file, to_text(payload_to_json(r)), out);
      return r.feasible ? kExitOk : kExitInfeasible;
    }
    if (*validate_cmd) {
      const MapDocument doc = load();
      const Trajectory t = parse_trajectory(read_json_file(traj_file));
      const ValidationReport rep = validate_trajectory(doc.map, doc.uav, t);
      detail::write_out(out_file, to_text(report_to_json(rep)), out);
      return rep.pass ? kExitOk : kExitInfeasible;
    }
    if (*plot) {
      const MapDocument doc = load();
      if (traj_file.empty()) {
        detail::write_out(out_file, render_svg(doc.map), out);
      } else {
        const Trajectory t = parse_trajectory(read_json_file(traj_file));
        detail::write_out(out_file, render_svg(doc.map, &t), out);
      }
      return kExitOk;
    }
    if (*gen) {
      if (w2) gen_params.uav.battery_weight = *w2;
      if (w3) gen_params.uav.payload_weight = *w3;
      std::optional<NetworkMap> m;
      try {
        m = generate_map(gen_params);
      } catch (const std::invalid_argument& e) {
        throw DocumentError("gen", e.what());
      }
      if (!m) {
        err << "no feasible map found within " << gen_params.max_attempts << " draws\n";
        return kExitInfeasible;
      }
      detail::write_out(out_file, to_text(map_to_json(*m, gen_params.uav)), out);
      return kExitOk;
    }
    if (*sweep_cmd) {
      const MapDocument doc = load();
      ExperimentSpec spec;
      spec.variable = detail::parse_variable(variable);
      spec.values = values;
      spec.objective = detail::parse_objective(objective);
      spec.station = station;
      std::ostringstream table;
      try {
        write_table(table, spec.variable, sweep(doc.map, doc.uav, spec));
      } catch (const std::invalid_argument& e) {
        throw DocumentError("sweep", e.what());
      }
      detail::write_out(out_file, table.str(), out);
      return kExitOk;
    }
    if (*scale) {
      const auto rows = scaling_probe(Ms, Ns, reps, seed, size);
      std::ostringstream table;
      write_table(table, rows);
      table << "# log-log slope in M: " << format_double(loglog_slope(rows)) << "\n";
      detail::write_out(out_file, table.str(), out);
      return kExitOk;
    }
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace uavroute::cli
