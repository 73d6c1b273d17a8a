#pragma once

// Weighted graph with deterministic shortest paths.
//
// Shortest-path ties are broken by a normative rule so that every
// implementation emits the same vertex sequence: among all minimum-weight
// paths, take the one whose vertex-index sequence is lexicographically
// smallest (or, with TieBreak::kFewestHops, the fewest edges first).
// Weights that agree to a relative 1e-10 count as tied.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uavroute {

inline constexpr double kWeightTieTol = 1e-10;

enum class TieBreak { kLexicographic, kFewestHops };

struct ShortestPath {
  double weight = 0.0;
  std::vector<std::size_t> vertices;
};

template <class Key>
class PlanGraph {
 public:
  struct Arc {
    std::size_t to;
    double weight;
  };

  explicit PlanGraph(bool directed = false) : directed_(directed) {}

  bool directed() const { return directed_; }
  std::size_t size() const { return keys_.size(); }
  const Key& key(std::size_t i) const { return keys_.at(i); }
  const std::vector<Arc>& out(std::size_t i) const { return out_[i]; }
  const std::vector<Arc>& in(std::size_t i) const { return directed_ ? in_[i] : out_[i]; }

  std::size_t add_vertex(Key k) {
    if (index_.contains(k)) throw std::invalid_argument("duplicate vertex key");
    index_.emplace(k, keys_.size());
    keys_.push_back(std::move(k));
    out_.emplace_back();
    if (directed_) in_.emplace_back();
    return keys_.size() - 1;
  }

  std::optional<std::size_t> find(const Key& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add_edge(std::size_t from, std::size_t to, double weight) {
    if (from >= size() || to >= size()) throw std::out_of_range("edge endpoint out of range");
    if (!std::isfinite(weight) || weight < 0.0)
      throw std::invalid_argument("edge weights must be finite and non-negative");
    out_[from].push_back({to, weight});
    if (directed_)
      in_[to].push_back({from, weight});
    else if (from != to)
      out_[to].push_back({from, weight});
  }

 private:
  bool directed_;
  std::vector<Key> keys_;
  std::map<Key, std::size_t> index_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
};

struct SearchOptions {
  TieBreak tie_break = TieBreak::kLexicographic;
  /// Vertices with allowed[i] == false are invisible to the search.
  const std::vector<bool>* allowed = nullptr;
};

namespace detail {

inline bool weights_tie(double a, double b) {
  return std::abs(a - b) <= kWeightTieTol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct ReverseTree {
  std::vector<double> dist;     // distance to the target
  std::vector<std::size_t> rank;  // settle order
};

template <class Key>
ReverseTree distances_to(const PlanGraph<Key>& g, std::size_t t, const std::vector<bool>* allowed) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  ReverseTree tree{std::vector<double>(g.size(), std::numeric_limits<double>::infinity()),
                   std::vector<std::size_t>(g.size(), kNone)};
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.dist[t] = 0.0;
  heap.emplace(0.0, t);
  std::size_t order = 0;
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (tree.rank[u] != kNone || d > tree.dist[u]) continue;
    tree.rank[u] = order++;
    for (const auto& arc : g.in(u)) {
      const std::size_t v = arc.to;
      if (allowed && !(*allowed)[v]) continue;
      const double nd = d + arc.weight;
      if (nd < tree.dist[v]) {
        tree.dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return tree;
}

}  // namespace detail

/// Minimum-weight s-t path, or empty when t is unreachable.
template <class Key>
std::optional<ShortestPath> dijkstra(const PlanGraph<Key>& g, std::size_t s, std::size_t t,
                                     const SearchOptions& opt = {}) {
  if (s >= g.size() || t >= g.size()) throw std::out_of_range("dijkstra endpoint out of range");
  if (opt.allowed && (!(*opt.allowed)[s] || !(*opt.allowed)[t])) return std::nullopt;
  const auto tree = detail::distances_to(g, t, opt.allowed);
  if (!std::isfinite(tree.dist[s])) return std::nullopt;

  // An arc u->v is tight when it lies on some shortest path to t. Requiring
  // rank(v) < rank(u) keeps the tight subgraph acyclic under zero weights.
  auto tight = [&](std::size_t u, const typename PlanGraph<Key>::Arc& arc) {
    const std::size_t v = arc.to;
    if (opt.allowed && !(*opt.allowed)[v]) return false;
    if (!std::isfinite(tree.dist[v]) || tree.rank[v] >= tree.rank[u]) return false;
    return detail::weights_tie(arc.weight + tree.dist[v], tree.dist[u]);
  };

  std::vector<std::size_t> hops;
  if (opt.tie_break == TieBreak::kFewestHops) {
    constexpr auto kFar = std::numeric_limits<std::size_t>::max();
    hops.assign(g.size(), kFar);
    std::vector<std::size_t> by_rank;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (std::isfinite(tree.dist[v])) by_rank.push_back(v);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::size_t a, std::size_t b) { return tree.rank[a] < tree.rank[b]; });
    for (std::size_t u : by_rank) {
      if (u == t) {
        hops[u] = 0;
        continue;
      }
      for (const auto& arc : g.out(u))
        if (tight(u, arc) && hops[arc.to] != kFar) hops[u] = std::min(hops[u], hops[arc.to] + 1);
    }
  }

  ShortestPath path{tree.dist[s], {s}};
  std::size_t u = s;
  while (u != t) {
    std::size_t next = std::numeric_limits<std::size_t>::max();
    for (const auto& arc : g.out(u)) {
      if (!tight(u, arc)) continue;
      if (!hops.empty() && hops[arc.to] + 1 != hops[u]) continue;
      next = std::min(next, arc.to);
    }
    u = next;
    path.vertices.push_back(u);
  }
  return path;
}

/// True when a directed path from s to t exists (s == t counts).
template <class Key>
bool bfs_reachable(const PlanGraph<Key>& g, std::size_t s, std::size_t t) {
  if (s >= g.size() || t >= g.size()) throw std::out_of_range("bfs endpoint out of range");
  std::vector<char> seen(g.size(), 0);
  std::deque<std::size_t> frontier{s};
  seen[s] = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop_front();
    if (u == t) return true;
    for (const auto& arc : g.out(u))
      if (!seen[arc.to]) {
        seen[arc.to] = 1;
        frontier.push_back(arc.to);
      }
  }
  return false;
}

}  // namespace uavroute
