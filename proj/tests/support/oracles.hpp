#pragma once
// Independent reference implementations used only by the tests. They trade
// speed for directness: adjacency matrices, exhaustive enumeration and dense
// Gaussian elimination.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "polar/graph.hpp"
#include "polar/partition.hpp"
#include "polar/rng.hpp"

namespace oracle {

using polar::Block;
using polar::Edge;
using polar::Graph;
using polar::NodeId;
using polar::Partition;

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({std::min(u, v), std::max(u, v)});
  return Graph::from_edges(n, std::move(edges));
}

inline Partition make_partition(std::initializer_list<int> blocks) {
  std::vector<Block> b;
  for (int x : blocks) b.push_back(x == 0 ? Block::A : Block::B);
  return Partition(std::move(b));
}

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangles_bridge() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({NodeId(u), NodeId(v)});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.push_back({NodeId(u), NodeId(a + v)});
  return Graph::from_edges(a + b, std::move(edges));
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) edges.push_back({NodeId(u), NodeId(u + 1)});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, NodeId(v)});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Connected G(n, p) graph by rejection; small n only.
inline Graph random_connected(std::size_t n, double p, polar::Rng& rng) {
  while (true) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (polar::uniform01(rng) < p) edges.push_back({NodeId(u), NodeId(v)});
    Graph g = Graph::from_edges(n, std::move(edges));
    if (n > 0 && polar::is_connected(g)) return g;
  }
}

inline Partition random_partition(std::size_t n, polar::Rng& rng, std::size_t min_block = 1) {
  while (true) {
    std::vector<Block> b(n);
    std::size_t a = 0;
    for (auto& x : b) {
      x = polar::coin(rng) ? Block::A : Block::B;
      a += x == Block::A;
    }
    if (a >= min_block && n - a >= min_block) return Partition(std::move(b));
  }
}

// -- betweenness by explicit shortest-path enumeration ----------------------

/// Edge betweenness over unordered pairs, found by listing every shortest
/// path of every pair. Indexed like g.edges().
inline std::vector<double> betweenness_by_paths(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency(g);
  std::map<std::pair<int, int>, std::size_t> edge_index;
  for (std::size_t e = 0; e < g.edge_count(); ++e) edge_index[{g.edge(e).u, g.edge(e).v}] = e;

  std::vector<double> out(g.edge_count(), 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(int(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (a[u][v] && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(int(v));
        }
    }
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[t] < 0) continue;
      std::vector<std::vector<int>> paths;
      std::vector<int> cur{int(s)};
      std::function<void()> walk = [&] {
        int u = cur.back();
        if (u == int(t)) {
          paths.push_back(cur);
          return;
        }
        for (std::size_t v = 0; v < n; ++v)
          if (a[u][v] && dist[v] == dist[u] + 1) {
            cur.push_back(int(v));
            walk();
            cur.pop_back();
          }
      };
      walk();
      for (const auto& pth : paths)
        for (std::size_t i = 0; i + 1 < pth.size(); ++i) {
          auto key = std::make_pair(std::min(pth[i], pth[i + 1]), std::max(pth[i], pth[i + 1]));
          out[edge_index.at(key)] += 1.0 / double(paths.size());
        }
    }
  }
  return out;
}

// -- dense linear algebra ----------------------------------------------------

/// Solves a x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Fixed point of harmonic averaging with `fixed` values pinned: for every
/// free node, value = mean of neighbor values.
inline std::vector<double> harmonic_extension(const Graph& g, const std::vector<std::optional<double>>& fixed) {
  const std::size_t n = g.node_count();
  const auto a = adjacency(g);
  std::vector<int> index(n, -1);
  int k = 0;
  for (std::size_t u = 0; u < n; ++u)
    if (!fixed[u]) index[u] = k++;
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
  std::vector<double> rhs(k, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    if (index[u] < 0) continue;
    double deg = 0;
    for (std::size_t v = 0; v < n; ++v) deg += a[u][v];
    m[index[u]][index[u]] = deg;
    for (std::size_t v = 0; v < n; ++v) {
      if (!a[u][v]) continue;
      if (index[v] >= 0) m[index[u]][index[v]] -= 1;
      else rhs[index[u]] += *fixed[v];
    }
  }
  const auto x = k ? dense_solve(m, rhs) : std::vector<double>{};
  std::vector<double> out(n);
  for (std::size_t u = 0; u < n; ++u) out[u] = fixed[u] ? *fixed[u] : x[index[u]];
  return out;
}

// -- naive score formulas ----------------------------------------------------

/// Q = (1/2m) sum_ij (A_ij - k_i k_j / 2m) [c_i == c_j].
inline double modularity(const Graph& g, const Partition& p) {
  const auto a = adjacency(g);
  const std::size_t n = g.node_count();
  std::vector<double> k(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) k[u] += a[u][v];
  const double two_m = std::accumulate(k.begin(), k.end(), 0.0);
  double q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.block(NodeId(i)) == p.block(NodeId(j))) q += a[i][j] - k[i] * k[j] / two_m;
  return q / two_m;
}

inline double ei(const Graph& g, const Partition& p) {
  const auto a = adjacency(g);
  double in = 0, ex = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (std::size_t j = i + 1; j < g.node_count(); ++j)
      if (a[i][j]) (p.block(NodeId(i)) == p.block(NodeId(j)) ? in : ex) += 1;
  return (in - ex) / (in + ex);
}

inline double aei(const Graph& g, const Partition& p) {
  const auto a = adjacency(g);
  double e_aa = 0, e_bb = 0, e_ab = 0, pairs_aa = 0, pairs_bb = 0, pairs_ab = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (std::size_t j = i + 1; j < g.node_count(); ++j) {
      const bool ia = p.in_a(NodeId(i)), ja = p.in_a(NodeId(j));
      if (ia && ja) {
        pairs_aa += 1;
        e_aa += a[i][j];
      } else if (!ia && !ja) {
        pairs_bb += 1;
        e_bb += a[i][j];
      } else {
        pairs_ab += 1;
        e_ab += a[i][j];
      }
    }
  const double saa = e_aa / pairs_aa, sbb = e_bb / pairs_bb, sab = e_ab / pairs_ab;
  return (saa + sbb - 2 * sab) / (saa + sbb + 2 * sab);
}

// -- exhaustive search -------------------------------------------------------

/// Smallest cut over every labeling whose larger block holds at most
/// `max_block` nodes.
inline std::size_t min_balanced_cut(const Graph& g, std::size_t max_block) {
  const std::size_t n = g.node_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::size_t a = std::size_t(__builtin_popcount(mask));
    if (a == 0 || a == n || a > max_block || n - a > max_block) continue;
    std::size_t cut = 0;
    for (const auto& e : g.edges()) cut += ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
    best = std::min(best, cut);
  }
  return best;
}

/// Fraction of (positive, negative) pairs ordered correctly, ties counted 1/2.
inline double pairwise_auc(const std::vector<double>& v, const std::vector<bool>& pos) {
  double good = 0, total = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (pos[i] && !pos[j]) {
        total += 1;
        good += v[i] > v[j] ? 1.0 : v[i] == v[j] ? 0.5 : 0.0;
      }
  return good / total;
}

// -- exhaustive graph enumeration -------------------------------------------

// -- random walks, degree correlations, label propagation --------------------

/// RWC by simulation: half the walks start uniformly in each block and stop at
/// the first of the k highest-degree nodes (ties by id) of either block.
inline double rwc_by_walks(const Graph& g, const Partition& p, std::size_t k, std::size_t walks,
                           polar::Rng& rng) {
  const std::size_t n = g.node_count();
  std::vector<int> stop(n, -1);
  std::vector<NodeId> members[2];
  for (std::size_t u = 0; u < n; ++u) members[p.in_a(NodeId(u)) ? 0 : 1].push_back(NodeId(u));
  for (int s = 0; s < 2; ++s) {
    std::vector<NodeId> ranked = members[s];
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](NodeId x, NodeId y) { return g.degree(x) > g.degree(y); });
    for (std::size_t i = 0; i < std::min(k, ranked.size()); ++i) stop[ranked[i]] = s;
  }
  double hits[2][2] = {{0, 0}, {0, 0}};
  for (int s = 0; s < 2; ++s) {
    for (std::size_t w = 0; w < walks / 2; ++w) {
      NodeId u = members[s][polar::uniform_index(rng, members[s].size())];
      while (stop[u] < 0) {
        const auto nb = g.neighbors(u);
        u = nb[polar::uniform_index(rng, nb.size())];
      }
      hits[s][stop[u]] += 1;
    }
  }
  const double per_side = double(walks / 2);
  return (hits[0][0] * hits[1][1] - hits[0][1] * hits[1][0]) / (per_side * per_side);
}

/// Edge counts keyed by ordered degree pair.
inline std::map<std::pair<int, int>, int> degree_pair_counts(const Graph& g) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& e : g.edges()) {
    const int a = g.degree(e.u), b = g.degree(e.v);
    ++out[{std::min(a, b), std::max(a, b)}];
  }
  return out;
}

/// Largest |x_u - mean of neighbors| over nodes not listed in `fixed`.
inline double harmonic_residual(const Graph& g, const std::vector<double>& x,
                                const std::vector<bool>& fixed) {
  double worst = 0.0;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (fixed[u]) continue;
    const auto nb = g.neighbors(NodeId(u));
    double s = 0.0;
    for (NodeId v : nb) s += x[v];
    worst = std::max(worst, std::abs(x[u] - s / double(nb.size())));
  }
  return worst;
}

namespace detail {

using Mask = std::uint64_t;  // upper-triangle adjacency bits, n <= 11

inline int bit(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Smallest relabeled mask over all permutations that respect a stable
/// degree-refined coloring. Equal for isomorphic graphs.
inline Mask canonical(int n, Mask m) {
  auto adj = [&](int i, int j) { return i != j && ((m >> bit(n, i, j)) & 1u); };
  std::vector<long> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long>> sig(n);
    for (int i = 0; i < n; ++i) {
      sig[i].push_back(color[i]);
      std::vector<long> nb;
      for (int j = 0; j < n; ++j)
        if (adj(i, j)) nb.push_back(color[j]);
      std::sort(nb.begin(), nb.end());
      sig[i].insert(sig[i].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<long> next(n);
    for (int i = 0; i < n; ++i) next[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
    if (next == color) break;
    color = next;
  }
  // Nodes ordered by color; permute freely inside each color class.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    classes.push_back({i, j});
    i = j;
  }
  Mask best = ~Mask(0);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      Mask r = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (adj(order[i], order[j])) r |= Mask(1) << bit(n, i, j);
      best = std::min(best, r);
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace detail

/// Every connected simple graph on n nodes, one per isomorphism class.
inline std::vector<Graph> connected_graphs(int n) {
  using detail::Mask;
  const int pairs = n * (n - 1) / 2;
  std::set<Mask> level{0};
  std::vector<Graph> out;
  auto to_graph = [&](Mask m) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((m >> detail::bit(n, i, j)) & 1u) edges.push_back({NodeId(i), NodeId(j)});
    return Graph::from_edges(std::size_t(n), std::move(edges));
  };
  for (int e = 0; e <= pairs; ++e) {
    std::set<Mask> next;
    for (Mask m : level) {
      Graph g = to_graph(m);
      if (polar::is_connected(g)) out.push_back(std::move(g));
      for (int b = 0; b < pairs; ++b)
        if (!((m >> b) & 1u)) next.insert(detail::canonical(n, m | (Mask(1) << b)));
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace oracle
