// Multilevel balanced bisection: heavy-edge matching, greedy graph growing,
// boundary Fiduccia-Mattheyses refinement during uncoarsening.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <tuple>

#include "polar/error.hpp"
#include "polar/partition.hpp"

namespace polar {
namespace {

using Weight = std::int64_t;

struct LevelGraph {
  std::vector<std::size_t> offsets{0};
  std::vector<int> adjacency;
  std::vector<Weight> edge_weight;
  std::vector<Weight> vertex_weight;

  std::size_t size() const { return vertex_weight.size(); }
};

LevelGraph level_from(const Graph& g) {
  LevelGraph lg;
  const std::size_t n = g.node_count();
  lg.offsets.resize(n + 1);
  lg.vertex_weight.assign(n, 1);
  for (std::size_t u = 0; u < n; ++u) {
    const auto nb = g.neighbors(static_cast<NodeId>(u));
    lg.adjacency.insert(lg.adjacency.end(), nb.begin(), nb.end());
    lg.offsets[u + 1] = lg.adjacency.size();
  }
  lg.edge_weight.assign(lg.adjacency.size(), 1);
  return lg;
}

struct Coarsening {
  LevelGraph coarse;
  std::vector<int> map;  // fine node -> coarse node
};

Coarsening coarsen(const LevelGraph& g, Weight max_vertex_weight, Rng& rng) {
  const std::size_t n = g.size();
  std::vector<int> match(n, -1);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  for (int u : order) {
    if (match[u] >= 0) continue;
    int best = -1;
    Weight best_w = -1;
    for (std::size_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
      const int v = g.adjacency[i];
      if (match[v] >= 0 || v == u) continue;
      if (g.vertex_weight[u] + g.vertex_weight[v] > max_vertex_weight) continue;
      const Weight w = g.edge_weight[i];
      if (w > best_w || (w == best_w && g.vertex_weight[v] < g.vertex_weight[best])) {
        best = v;
        best_w = w;
      }
    }
    if (best >= 0) {
      match[u] = best;
      match[best] = u;
    } else {
      match[u] = u;
    }
  }

  Coarsening out;
  out.map.assign(n, -1);
  std::vector<int> first, second;
  for (std::size_t u = 0; u < n; ++u) {
    if (out.map[u] >= 0) continue;
    const int c = static_cast<int>(first.size());
    out.map[u] = c;
    first.push_back(static_cast<int>(u));
    const int mate = match[u];
    if (mate != static_cast<int>(u)) {
      out.map[mate] = c;
      second.push_back(mate);
    } else {
      second.push_back(-1);
    }
  }

  const std::size_t nc = first.size();
  LevelGraph& cg = out.coarse;
  cg.offsets.assign(nc + 1, 0);
  cg.vertex_weight.assign(nc, 0);
  std::vector<int> slot(nc, -1);
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t begin = cg.adjacency.size();
    for (int member : {first[c], second[c]}) {
      if (member < 0) continue;
      cg.vertex_weight[c] += g.vertex_weight[member];
      for (std::size_t i = g.offsets[member]; i < g.offsets[member + 1]; ++i) {
        const int cv = out.map[g.adjacency[i]];
        if (cv == static_cast<int>(c)) continue;
        if (slot[cv] < 0) {
          slot[cv] = static_cast<int>(cg.adjacency.size());
          cg.adjacency.push_back(cv);
          cg.edge_weight.push_back(g.edge_weight[i]);
        } else {
          cg.edge_weight[slot[cv]] += g.edge_weight[i];
        }
      }
    }
    for (std::size_t i = begin; i < cg.adjacency.size(); ++i) slot[cg.adjacency[i]] = -1;
    cg.offsets[c + 1] = cg.adjacency.size();
  }
  return out;
}

/// Bisection state on one level with incremental gain bookkeeping.
class Bisection {
 public:
  Bisection(const LevelGraph& g, std::vector<std::uint8_t> side, Weight max_block)
      : g_(g), side_(std::move(side)), max_block_(max_block) {
    const std::size_t n = g.size();
    external_.assign(n, 0);
    internal_.assign(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      weight_[side_[u]] += g.vertex_weight[u];
      for (std::size_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
        if (side_[g.adjacency[i]] == side_[u]) internal_[u] += g.edge_weight[i];
        else external_[u] += g.edge_weight[i];
      }
      cut2_ += external_[u];
    }
  }

  Weight cut() const { return cut2_ / 2; }
  Weight gain(int u) const { return external_[u] - internal_[u]; }
  Weight violation() const {
    return std::max<Weight>(0, std::max(weight_[0], weight_[1]) - max_block_);
  }
  std::pair<Weight, Weight> quality() const { return {violation(), cut()}; }
  const std::vector<std::uint8_t>& sides() const { return side_; }
  bool boundary(int u) const { return external_[u] > 0; }

  bool may_move(int u) const {
    const int from = side_[u];
    const int to = 1 - from;
    const Weight w = g_.vertex_weight[u];
    if (weight_[to] + w <= max_block_) return true;
    return weight_[from] > max_block_ && weight_[to] + w < weight_[from];
  }

  template <class OnNeighbor>
  void move(int u, OnNeighbor&& on_neighbor) {
    const int from = side_[u];
    const int to = 1 - from;
    cut2_ -= 2 * gain(u);
    std::swap(external_[u], internal_[u]);
    side_[u] = static_cast<std::uint8_t>(to);
    weight_[from] -= g_.vertex_weight[u];
    weight_[to] += g_.vertex_weight[u];
    for (std::size_t i = g_.offsets[u]; i < g_.offsets[u + 1]; ++i) {
      const int v = g_.adjacency[i];
      const Weight w = g_.edge_weight[i];
      if (side_[v] == to) {
        external_[v] -= w;
        internal_[v] += w;
      } else {
        internal_[v] -= w;
        external_[v] += w;
      }
      on_neighbor(v);
    }
  }

 private:
  const LevelGraph& g_;
  std::vector<std::uint8_t> side_;
  Weight max_block_;
  Weight weight_[2] = {0, 0};
  std::vector<Weight> external_;
  std::vector<Weight> internal_;
  Weight cut2_ = 0;
};

using Entry = std::tuple<Weight, std::uint64_t, int>;

void fm_refine(Bisection& state, std::size_t n, Rng& rng, int max_passes = 10) {
  const std::size_t stall_limit = std::min<std::size_t>(n, std::max<std::size_t>(50, n / 50));
  std::vector<std::uint8_t> locked(n);
  for (int pass = 0; pass < max_passes; ++pass) {
    std::fill(locked.begin(), locked.end(), 0);
    std::priority_queue<Entry> heap;
    const bool rebalance = state.violation() > 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (state.boundary(static_cast<int>(u)) || rebalance) {
        heap.emplace(state.gain(static_cast<int>(u)), rng(), static_cast<int>(u));
      }
    }
    std::vector<int> moves;
    auto best = state.quality();
    std::size_t best_len = 0, since_best = 0;
    while (!heap.empty() && since_best < stall_limit) {
      const auto [g, key, u] = heap.top();
      heap.pop();
      if (locked[u] || g != state.gain(u) || !state.may_move(u)) continue;
      locked[u] = 1;
      state.move(u, [&](int v) {
        if (!locked[v] && state.boundary(v)) heap.emplace(state.gain(v), rng(), v);
      });
      moves.push_back(u);
      if (state.quality() < best) {
        best = state.quality();
        best_len = moves.size();
        since_best = 0;
      } else {
        ++since_best;
      }
    }
    for (std::size_t i = moves.size(); i > best_len; --i) state.move(moves[i - 1], [](int) {});
    if (best_len == 0) break;
  }
}

std::vector<std::uint8_t> grow_bisection(const LevelGraph& g, Weight max_block, Rng& rng) {
  const std::size_t n = g.size();
  const Weight total = std::accumulate(g.vertex_weight.begin(), g.vertex_weight.end(), Weight{0});
  const Weight target = total / 2;
  std::vector<std::uint8_t> side(n, 1);
  std::vector<Weight> gain(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) gain[u] -= g.edge_weight[i];
  }
  std::priority_queue<Entry> heap;
  Weight grown = 0;
  std::size_t unvisited_cursor = 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint8_t> skipped(n, 0);

  while (grown < target) {
    int u = -1;
    while (!heap.empty()) {
      const auto [gv, key, v] = heap.top();
      heap.pop();
      if (side[v] == 0 || skipped[v] || gv != gain[v]) continue;
      u = v;
      break;
    }
    if (u < 0) {
      while (unvisited_cursor < n &&
             (side[order[unvisited_cursor]] == 0 || skipped[order[unvisited_cursor]])) {
        ++unvisited_cursor;
      }
      if (unvisited_cursor == n) break;
      u = order[unvisited_cursor];
    }
    if (grown + g.vertex_weight[u] > max_block) {
      skipped[u] = 1;
      continue;
    }
    side[u] = 0;
    grown += g.vertex_weight[u];
    for (std::size_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
      const int v = g.adjacency[i];
      if (side[v] == 0) continue;
      gain[v] += 2 * g.edge_weight[i];
      heap.emplace(gain[v], rng(), v);
    }
  }
  return side;
}

std::vector<std::uint8_t> initial_bisection(const LevelGraph& g, Weight max_block, Rng& rng,
                                            int trials) {
  std::vector<std::uint8_t> best;
  std::pair<Weight, Weight> best_quality{0, 0};
  for (int t = 0; t < trials; ++t) {
    Bisection state(g, grow_bisection(g, max_block, rng), max_block);
    fm_refine(state, g.size(), rng);
    if (best.empty() || state.quality() < best_quality) {
      best_quality = state.quality();
      best = state.sides();
    }
  }
  return best;
}

}  // namespace

Partition bisect_mincut(const Graph& g, double balance_tolerance, Rng& rng) {
  const std::size_t n = g.node_count();
  if (n < 2) throw Error("cannot bipartition");
  if (!(balance_tolerance >= 0.0 && balance_tolerance < 1.0)) {
    throw Error("balance tolerance must lie in [0, 1)");
  }
  const auto total = static_cast<Weight>(n);
  Weight max_block = std::max<Weight>((total + 1) / 2,
                                      static_cast<Weight>(std::floor((1.0 + balance_tolerance) *
                                                                     static_cast<double>(total) / 2.0)));
  max_block = std::min(max_block, total - 1);

  constexpr std::size_t kCoarseTarget = 64;
  const Weight max_vertex_weight =
      std::max<Weight>(1, static_cast<Weight>(std::ceil(1.5 * static_cast<double>(total) /
                                                        static_cast<double>(kCoarseTarget))));
  std::vector<LevelGraph> levels;
  std::vector<std::vector<int>> maps;
  levels.push_back(level_from(g));
  while (levels.back().size() > kCoarseTarget) {
    auto c = coarsen(levels.back(), max_vertex_weight, rng);
    if (c.coarse.size() * 20 > levels.back().size() * 19) break;
    maps.push_back(std::move(c.map));
    levels.push_back(std::move(c.coarse));
  }

  auto side = initial_bisection(levels.back(), max_block, rng, 8);
  for (std::size_t level = levels.size() - 1; level-- > 0;) {
    const auto& map = maps[level];
    std::vector<std::uint8_t> fine(levels[level].size());
    for (std::size_t u = 0; u < fine.size(); ++u) fine[u] = side[map[u]];
    Bisection state(levels[level], std::move(fine), max_block);
    fm_refine(state, levels[level].size(), rng);
    side = state.sides();
  }

  std::vector<Block> blocks(n);
  for (std::size_t u = 0; u < n; ++u) blocks[u] = side[u] ? Block::B : Block::A;
  Partition p(std::move(blocks));
  if (p.size_a() == 0 || p.size_b() == 0) throw Error("bisection left a block empty");
  return p;
}

}  // namespace polar
