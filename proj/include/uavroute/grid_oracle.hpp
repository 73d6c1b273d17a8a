#pragma once

// Lattice planner used as a verification oracle. Covered lattice points are
// joined by short straight moves (every primitive direction with
// max(|dx|,|dy|) <= 5 cells), terminals and stations attach to covered
// lattice points nearby, and every edge is checked exactly for coverage.
// Since every edge is a real covered segment the result is an upper bound on
// the exact optimum, tightening as the step shrinks.
//
// Lattice points sit at integer multiples of the step, so the lattice at
// step/2 contains the one at step, and every move at step is two moves at
// step/2: refinement never lengthens a route.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uavroute/geometry.hpp"
#include "uavroute/model.hpp"
#include "uavroute/planner_battery.hpp"
#include "uavroute/types.hpp"

namespace uavroute {

inline constexpr int kOracleMoveRadius = 5;
inline constexpr double kOracleAttachRadius = 16.0;

namespace detail {

struct LatticeMove {
  int dx, dy;
  double length;  // in cells
};

inline std::vector<LatticeMove> lattice_moves() {
  std::vector<LatticeMove> moves;
  for (int dy = -kOracleMoveRadius; dy <= kOracleMoveRadius; ++dy)
    for (int dx = -kOracleMoveRadius; dx <= kOracleMoveRadius; ++dx)
      if ((dx != 0 || dy != 0) && std::gcd(dx, dy) == 1)
        moves.push_back({dx, dy, std::sqrt(static_cast<double>(dx * dx + dy * dy))});
  return moves;
}

/// Covered lattice points of the coverage component containing u0. Each
/// cell carries a bitmask of the disks covering it; bit 31 lumps together
/// stations 31 and above and is never trusted for shared-disk shortcuts.
class CoverageLattice {
 public:
  static constexpr std::uint32_t kOverflowBit = 1u << 31;

  CoverageLattice(const NetworkMap& map, double step) : step_(step) {
    const std::size_t M = map.stations.size();
    std::vector<char> in(M, 0);
    std::vector<std::size_t> frontier;
    for (std::size_t m = 0; m < M; ++m)
      if (covered_by(map, m, map.u0)) {
        in[m] = 1;
        frontier.push_back(m);
      }
    while (!frontier.empty()) {
      const std::size_t m = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < M; ++k)
        if (!in[k] && disks_touch(map, m, k)) {
          in[k] = 1;
          frontier.push_back(k);
        }
    }
    double lox = kInf, loy = kInf, hix = -kInf, hiy = -kInf;
    for (std::size_t m = 0; m < M; ++m) {
      if (!in[m]) continue;
      const Vec2 c = map.stations[m].position;
      const double r = map.effective_radius(m);
      lox = std::min(lox, c.x - r);
      hix = std::max(hix, c.x + r);
      loy = std::min(loy, c.y - r);
      hiy = std::max(hiy, c.y + r);
    }
    if (lox > hix) return;
    i0_ = static_cast<long>(std::floor(lox / step)) - 1;
    j0_ = static_cast<long>(std::floor(loy / step)) - 1;
    width_ = static_cast<std::size_t>(std::ceil(hix / step) - i0_ + 2);
    height_ = static_cast<std::size_t>(std::ceil(hiy / step) - j0_ + 2);
    mask_.assign(width_ * height_, 0);
    for (std::size_t m = 0; m < M; ++m) {
      if (!in[m]) continue;
      const std::uint32_t bit = m < 31 ? (1u << m) : kOverflowBit;
      const Vec2 c = map.stations[m].position;
      const double r = map.effective_radius(m) + kCoverageSlack;
      const long jlo = std::max<long>(0, static_cast<long>(std::floor((c.y - r) / step)) - j0_);
      const long jhi = std::min<long>(static_cast<long>(height_) - 1,
                                      static_cast<long>(std::ceil((c.y + r) / step)) - j0_);
      for (long j = jlo; j <= jhi; ++j) {
        const double y = static_cast<double>(j + j0_) * step;
        const double dy = y - c.y;
        if (dy * dy > r * r) continue;
        const double hw = std::sqrt(r * r - dy * dy);
        const long ilo = std::max<long>(0, static_cast<long>(std::floor((c.x - hw) / step)) - i0_);
        const long ihi = std::min<long>(static_cast<long>(width_) - 1,
                                        static_cast<long>(std::ceil((c.x + hw) / step)) - i0_);
        for (long i = ilo; i <= ihi; ++i) {
          const std::size_t id = static_cast<std::size_t>(j) * width_ + static_cast<std::size_t>(i);
          if (covered_by(map, m, point(id))) mask_[id] |= bit;
        }
      }
    }
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t cells() const { return mask_.size(); }
  std::uint32_t mask(std::size_t id) const { return mask_[id]; }
  double step() const { return step_; }

  Vec2 point(std::size_t id) const {
    const long i = static_cast<long>(id % width_) + i0_;
    const long j = static_cast<long>(id / width_) + j0_;
    return {static_cast<double>(i) * step_, static_cast<double>(j) * step_};
  }

  /// Covered cells within `radius` of p, ascending by id.
  std::vector<std::size_t> cells_near(Vec2 p, double radius) const {
    std::vector<std::size_t> out;
    if (mask_.empty()) return out;
    const long ilo = std::max<long>(0, static_cast<long>(std::floor((p.x - radius) / step_)) - i0_);
    const long ihi = std::min<long>(static_cast<long>(width_) - 1,
                                    static_cast<long>(std::ceil((p.x + radius) / step_)) - i0_);
    const long jlo = std::max<long>(0, static_cast<long>(std::floor((p.y - radius) / step_)) - j0_);
    const long jhi = std::min<long>(static_cast<long>(height_) - 1,
                                    static_cast<long>(std::ceil((p.y + radius) / step_)) - j0_);
    for (long j = jlo; j <= jhi; ++j)
      for (long i = ilo; i <= ihi; ++i) {
        const std::size_t id = static_cast<std::size_t>(j) * width_ + static_cast<std::size_t>(i);
        if (mask_[id] != 0 && distance(point(id), p) <= radius) out.push_back(id);
      }
    return out;
  }

 private:
  double step_;
  long i0_ = 0, j0_ = 0;
  std::size_t width_ = 0, height_ = 0;
  std::vector<std::uint32_t> mask_;
};

}  // namespace detail

/// Lattice local routes for every ordered pair, in the same order and with
/// the same conventions as compute_local_routes. `connected` means the
/// lattice found a route.
inline std::vector<LocalRoute> grid_oracle_routes(const NetworkMap& map, const UavParams& uav,
                                                  double step, bool unlimited_only = false) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be positive");
  validate_map(map);
  const GlobalIndex idx{map.charging.size()};
  const std::size_t S = idx.size();
  std::vector<Vec2> special(S);
  std::vector<char> usable(S, 1);
  special[idx.start()] = map.u0;
  special[idx.final()] = map.uF;
  for (std::size_t n = 0; n < map.charging.size(); ++n) {
    special[idx.of_station(n)] = map.charging[n].position;
    usable[idx.of_station(n)] = map.charging[n].available() && !unlimited_only;
  }

  const detail::CoverageLattice lat(map, step);
  const auto moves = detail::lattice_moves();
  const double attach = std::max(kOracleAttachRadius, 2.0 * step);

  // Attachments: special g <-> covered cell within the attach radius.
  std::vector<std::vector<std::pair<std::size_t, double>>> attach_of_special(S);
  std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, double>>> attach_of_cell;
  for (std::size_t g = 0; g < S; ++g) {
    if (!usable[g]) continue;
    for (std::size_t id : lat.cells_near(special[g], attach)) {
      const Vec2 q = lat.point(id);
      if (has_outage(special[g], q, map)) continue;
      const double len = distance(special[g], q);
      attach_of_special[g].emplace_back(id, len);
      attach_of_cell[id].emplace_back(g, len);
    }
  }

  constexpr std::uint8_t kFromSource = 254;
  constexpr std::uint8_t kUnset = 255;
  constexpr std::size_t kDirect = std::numeric_limits<std::size_t>::max();
  const std::size_t C = lat.cells();
  std::vector<double> dist;
  std::vector<std::uint8_t> pred;

  std::vector<LocalRoute> routes;
  for (std::size_t from = 0; from < S; ++from) {
    if (from == idx.final() || !usable[from]) continue;
    std::vector<std::size_t> targets;
    for (std::size_t to = 1; to < S; ++to)
      if (to != from && usable[to] && (!unlimited_only || to == idx.final())) targets.push_back(to);
    if (targets.empty()) continue;

    dist.assign(C, kInf);
    pred.assign(C, kUnset);
    std::vector<double> tdist(S, kInf);
    std::vector<std::size_t> tpred(S, kDirect);
    std::vector<char> is_target(S, 0), settled(S, 0);
    for (std::size_t t : targets) is_target[t] = 1;

    using Item = std::pair<double, std::size_t>;  // ids >= C are specials
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    const Vec2 ps = special[from];
    for (std::size_t t : targets)
      if (!has_outage(ps, special[t], map)) {
        tdist[t] = distance(ps, special[t]);
        heap.emplace(tdist[t], C + t);
      }
    for (auto [id, len] : attach_of_special[from])
      if (len < dist[id]) {
        dist[id] = len;
        pred[id] = kFromSource;
        heap.emplace(len, id);
      }

    std::size_t remaining = targets.size();
    while (!heap.empty() && remaining > 0) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (u >= C) {
        const std::size_t g = u - C;
        if (settled[g] || d > tdist[g]) continue;
        settled[g] = 1;
        --remaining;
        continue;
      }
      if (d > dist[u]) continue;
      const Vec2 pu = lat.point(u);
      const std::uint32_t mu = lat.mask(u);
      const long ui = static_cast<long>(u % lat.width());
      const long uj = static_cast<long>(u / lat.width());
      for (std::size_t k = 0; k < moves.size(); ++k) {
        const long vi = ui + moves[k].dx;
        const long vj = uj + moves[k].dy;
        if (vi < 0 || vj < 0 || vi >= static_cast<long>(lat.width()) ||
            vj >= static_cast<long>(lat.height()))
          continue;
        const std::size_t v = static_cast<std::size_t>(vj) * lat.width() + static_cast<std::size_t>(vi);
        const std::uint32_t mv = lat.mask(v);
        if (mv == 0) continue;
        const double nd = d + moves[k].length * step;
        if (!(nd < dist[v])) continue;
        if ((mu & mv & ~detail::CoverageLattice::kOverflowBit) == 0 && has_outage(pu, lat.point(v), map))
          continue;
        dist[v] = nd;
        pred[v] = static_cast<std::uint8_t>(k);
        heap.emplace(nd, v);
      }
      if (auto it = attach_of_cell.find(u); it != attach_of_cell.end())
        for (auto [g, len] : it->second) {
          if (!is_target[g] || settled[g]) continue;
          const double nd = d + len;
          if (nd < tdist[g]) {
            tdist[g] = nd;
            tpred[g] = u;
            heap.emplace(nd, C + g);
          }
        }
    }

    for (std::size_t to = 1; to < S; ++to) {
      if (to == from || !usable[to] || (unlimited_only && to != idx.final())) continue;
      LocalRoute r;
      r.from = from;
      r.to = to;
      if (std::isfinite(tdist[to])) {
        std::vector<Vec2> rev{special[to]};
        for (std::size_t c = tpred[to]; c != kDirect;) {
          rev.push_back(lat.point(c));
          if (pred[c] == kFromSource) break;
          const auto& mv = moves[pred[c]];
          c = c - static_cast<std::size_t>(static_cast<long>(mv.dy) * static_cast<long>(lat.width()) + mv.dx);
        }
        rev.push_back(ps);
        std::reverse(rev.begin(), rev.end());
        for (Vec2 p : rev)
          if (r.path.empty() || !(r.path.back() == p)) r.path.push_back(p);
        r.connected = true;
        r.length = 0.0;
        for (std::size_t i = 0; i + 1 < r.path.size(); ++i) r.length += distance(r.path[i], r.path[i + 1]);
        const auto check = max_feasible_speed(r.length, uav, departure_surcharge(map, idx, from));
        if (check.feasible) r.max_speed = check.max_speed;
      }
      routes.push_back(std::move(r));
    }
  }
  return routes;
}

/// Unlimited-battery plan from lattice routes: the u0-uF route at top speed.
inline PlanResult oracle_unlimited_from_routes(const NetworkMap& map, const UavParams& uav,
                                               std::vector<LocalRoute> routes) {
  PlanResult result;
  result.objective = Objective::kTimeUnlimited;
  const GlobalIndex idx{map.charging.size()};
  for (const auto& r : routes) {
    if (r.from != idx.start() || r.to != idx.final() || !r.connected) continue;
    result.feasible = true;
    result.total_energy = 0.0;
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
      result.trajectory.append_leg(r.path[i], r.path[i + 1], uav.max_speed());
      result.total_energy += leg_energy(distance(r.path[i], r.path[i + 1]), uav.max_speed(), uav);
    }
    result.objective_value = result.trajectory.total_time;
    result.global_sequence = {idx.start(), idx.final()};
  }
  result.local_routes = std::move(routes);
  return result;
}

/// Lattice counterpart of plan_unlimited / plan_min_time / plan_min_energy.
/// With `battery` false the objective is ignored and the u0-uF lattice route
/// is flown at top speed.
inline PlanResult grid_oracle_plan(const NetworkMap& map, const UavParams& uav, double step,
                                   Objective objective, bool battery = true) {
  validate(uav);
  if (battery && objective != Objective::kTimeUnlimited)
    return solve_global(map, uav, grid_oracle_routes(map, uav, step), objective);
  return oracle_unlimited_from_routes(map, uav, grid_oracle_routes(map, uav, step, true));
}

}  // namespace uavroute
