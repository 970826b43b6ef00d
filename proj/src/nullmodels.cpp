#include "polar/nullmodels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "polar/error.hpp"

namespace polar {
namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::vector<std::array<NodeId, 2>> edge_array(const Graph& g) {
  std::vector<std::array<NodeId, 2>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

std::unordered_set<std::uint64_t> edge_set(const Graph& g) {
  std::unordered_set<std::uint64_t> s;
  s.reserve(2 * g.edge_count() + 1);
  for (const auto& e : g.edges()) s.insert(pair_key(e.u, e.v));
  return s;
}

Graph rebuild(const Graph& g, const std::vector<std::array<NodeId, 2>>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return Graph::from_edges(g.node_count(), std::move(out), g.labels());
}

/// Rewires edges i and j (already chosen, with their endpoints oriented) into
/// (u, y) and (x, v) if the result stays simple.
bool try_swap(std::vector<std::array<NodeId, 2>>& edges, std::unordered_set<std::uint64_t>& present,
              std::size_t i, int slot_i, std::size_t j, int slot_j) {
  const NodeId v = edges[i][slot_i], u = edges[i][1 - slot_i];
  const NodeId y = edges[j][slot_j], x = edges[j][1 - slot_j];
  if (u == y || x == v || v == y) return false;
  const auto new_uy = pair_key(u, y), new_xv = pair_key(x, v);
  if (present.contains(new_uy) || present.contains(new_xv)) return false;
  present.erase(pair_key(u, v));
  present.erase(pair_key(x, y));
  present.insert(new_uy);
  present.insert(new_xv);
  edges[i][slot_i] = y;
  edges[j][slot_j] = v;
  return true;
}

/// Edges of G(size, p) on ids offset..offset+size-1 by geometric skipping.
void sample_gnp(std::size_t size, double p, NodeId offset, Rng& rng, std::vector<Edge>& out) {
  if (p <= 0 || size < 2) return;
  if (p >= 1) {
    for (std::size_t v = 1; v < size; ++v) {
      for (std::size_t w = 0; w < v; ++w) {
        out.push_back({offset + static_cast<NodeId>(w), offset + static_cast<NodeId>(v)});
      }
    }
    return;
  }
  const double log_q = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  const auto n = static_cast<std::int64_t>(size);
  while (v < n) {
    const double r = uniform01(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) out.push_back({offset + static_cast<NodeId>(w), offset + static_cast<NodeId>(v)});
  }
}

/// Edges of the bipartite random graph between two id ranges.
void sample_bipartite(std::size_t left, std::size_t right, double p, NodeId left_offset,
                      NodeId right_offset, Rng& rng, std::vector<Edge>& out) {
  if (p <= 0) return;
  const auto total = static_cast<std::int64_t>(left * right);
  auto emit = [&](std::int64_t idx) {
    out.push_back({left_offset + static_cast<NodeId>(idx / static_cast<std::int64_t>(right)),
                   right_offset + static_cast<NodeId>(idx % static_cast<std::int64_t>(right))});
  };
  if (p >= 1) {
    for (std::int64_t idx = 0; idx < total; ++idx) emit(idx);
    return;
  }
  const double log_q = std::log1p(-p);
  std::int64_t idx = -1;
  while (true) {
    const double r = uniform01(rng);
    idx += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    if (idx >= total) break;
    emit(idx);
  }
}

}  // namespace

Graph gen_er(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t possible = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > possible) {
    throw Error("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " nodes");
  }
  // Sample whichever of the edge set or its complement is smaller.
  const bool complement = m > possible / 2;
  const std::size_t draws = complement ? possible - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(2 * draws + 1);
  std::vector<Edge> picked;
  picked.reserve(draws);
  while (picked.size() < draws) {
    const auto u = static_cast<NodeId>(uniform_index(rng, n));
    auto v = static_cast<NodeId>(uniform_index(rng, n - 1));
    if (v >= u) ++v;
    if (chosen.insert(pair_key(u, v)).second) picked.push_back({std::min(u, v), std::max(u, v)});
  }
  if (!complement) return Graph::from_edges(n, std::move(picked));

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!chosen.contains(pair_key(static_cast<NodeId>(u), static_cast<NodeId>(v)))) {
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
      }
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph sample_configuration(const Graph& g, Rng& rng, double swaps_per_edge) {
  const std::size_t m = g.edge_count();
  if (m < 2) return g;
  auto edges = edge_array(g);
  auto present = edge_set(g);
  const auto attempts = static_cast<std::size_t>(std::llround(swaps_per_edge * static_cast<double>(m)));
  for (std::size_t t = 0; t < attempts; ++t) {
    const std::size_t i = uniform_index(rng, m);
    std::size_t j = uniform_index(rng, m - 1);
    if (j >= i) ++j;
    try_swap(edges, present, i, 1, j, coin(rng) ? 1 : 0);
  }
  return rebuild(g, edges);
}

Graph sample_dk2(const Graph& g, Rng& rng, double swaps_per_edge) {
  const std::size_t m = g.edge_count();
  if (m < 2) return g;
  auto edges = edge_array(g);
  auto present = edge_set(g);

  // Stubs (edge * 2 + slot) grouped by the degree of the node in that slot.
  // Swaps only exchange equal-degree nodes, so the grouping stays valid.
  std::vector<std::vector<std::uint64_t>> stubs(static_cast<std::size_t>(g.max_degree()) + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (int s = 0; s < 2; ++s) stubs[g.degree(edges[i][s])].push_back(2 * i + s);
  }
  const auto attempts = static_cast<std::size_t>(std::llround(swaps_per_edge * static_cast<double>(m)));
  for (std::size_t t = 0; t < attempts; ++t) {
    const std::size_t i = uniform_index(rng, m);
    const int slot_i = coin(rng) ? 1 : 0;
    const auto& pool = stubs[g.degree(edges[i][slot_i])];
    const std::uint64_t stub = pool[uniform_index(rng, pool.size())];
    const std::size_t j = stub / 2;
    if (j == i) continue;
    try_swap(edges, present, i, slot_i, j, static_cast<int>(stub % 2));
  }
  return rebuild(g, edges);
}

Graph randomize(const Graph& g, int d, Rng& rng) {
  switch (d) {
    case 0: {
      const Graph er = gen_er(g.node_count(), g.edge_count(), rng);
      return Graph::from_edges(g.node_count(), {er.edges().begin(), er.edges().end()}, g.labels());
    }
    case 1: return sample_configuration(g, rng);
    case 2: return sample_dk2(g, rng);
    default: throw Error("dk level must be 0, 1 or 2");
  }
}

// -- power law ----------------------------------------------------------------

double PowerLawMixture::mean() const {
  const auto p = pmf();
  double mu = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mu += p[i] * (k_min + static_cast<double>(i));
  return mu;
}

std::vector<double> PowerLawMixture::pmf() const {
  std::vector<double> law(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) law[k - k_min] = std::pow(static_cast<double>(k), -gamma);
  double z_lower = 0.0, z_upper = 0.0;
  for (std::size_t i = 0; i < law.size(); ++i) {
    z_lower += law[i];
    if (i > 0) z_upper += law[i];
  }
  std::vector<double> p(law.size());
  for (std::size_t i = 0; i < law.size(); ++i) {
    p[i] = weight * law[i] / z_lower + (i > 0 && z_upper > 0 ? (1.0 - weight) * law[i] / z_upper : 0.0);
  }
  return p;
}

PowerLawMixture fit_power_law_mean(std::size_t n, double gamma, double target_mean) {
  if (!(gamma > 2.0)) throw Error("power-law exponent must exceed 2");
  if (n < 3) throw Error("power-law graph needs at least 3 nodes");
  const int k_max = static_cast<int>(n) - 1;
  // Suffix sums give the mean of the law truncated to [a, k_max] for every a.
  std::vector<double> s0(k_max + 2, 0.0), s1(k_max + 2, 0.0);
  for (int k = k_max; k >= 1; --k) {
    const double w = std::pow(static_cast<double>(k), -gamma);
    s0[k] = s0[k + 1] + w;
    s1[k] = s1[k + 1] + w * k;
  }
  auto mean_from = [&](int a) { return s1[a] / s0[a]; };
  const double lo = mean_from(1), hi = static_cast<double>(k_max);
  if (!(target_mean >= lo && target_mean <= hi)) {
    std::ostringstream msg;
    msg << "target mean degree " << target_mean << " outside feasible range [" << lo << ", " << hi
        << "] for gamma " << gamma;
    throw Error(msg.str());
  }
  PowerLawMixture mix;
  mix.gamma = gamma;
  mix.k_max = k_max;
  for (int a = 1; a < k_max; ++a) {
    const double m0 = mean_from(a), m1 = mean_from(a + 1);
    if (target_mean <= m1) {
      mix.k_min = a;
      mix.weight = m1 > m0 ? (m1 - target_mean) / (m1 - m0) : 1.0;
      return mix;
    }
  }
  mix.k_min = k_max - 1;
  mix.weight = 0.0;
  return mix;
}

std::vector<int> sample_power_law_degrees(std::size_t n, double gamma, double target_mean, Rng& rng) {
  const auto mix = fit_power_law_mean(n, gamma, target_mean);
  const auto p = mix.pmf();
  std::discrete_distribution<int> draw(p.begin(), p.end());
  std::vector<int> k(n);
  long long sum = 0;
  for (auto& x : k) {
    x = mix.k_min + draw(rng);
    sum += x;
  }
  while (sum % 2 != 0) {
    const std::size_t i = uniform_index(rng, n);
    sum -= k[i];
    k[i] = mix.k_min + draw(rng);
    sum += k[i];
  }
  return k;
}

Graph erased_configuration_model(const std::vector<int>& degrees, Rng& rng) {
  std::vector<NodeId> stubs;
  for (std::size_t u = 0; u < degrees.size(); ++u) {
    if (degrees[u] < 0) throw Error("negative degree");
    stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[u]), static_cast<NodeId>(u));
  }
  if (stubs.size() % 2 != 0) throw Error("degree sum must be even");
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Graph::from_edges(degrees.size(), std::move(edges));
}

Graph gen_powerlaw(std::size_t n, double gamma, double target_mean_degree, Rng& rng) {
  return preprocess(erased_configuration_model(sample_power_law_degrees(n, gamma, target_mean_degree, rng), rng));
}

// -- stochastic block model --------------------------------------------------

std::string to_string(SbmScheme s) {
  switch (s) {
    case SbmScheme::Low: return "low";
    case SbmScheme::Medium: return "medium";
    case SbmScheme::High: return "high";
  }
  return "?";
}

SbmScheme parse_sbm_scheme(const std::string& name) {
  if (name == "low") return SbmScheme::Low;
  if (name == "medium") return SbmScheme::Medium;
  if (name == "high") return SbmScheme::High;
  throw Error("unknown SBM scheme '" + name + "'");
}

double sbm_expected_cross_edges(std::size_t n_small, std::size_t n_large, double k_in, double c,
                                SbmScheme scheme) {
  const double k_out = k_in / c;
  switch (scheme) {
    case SbmScheme::Low: return k_out * static_cast<double>(n_large);
    case SbmScheme::High: return k_out * static_cast<double>(n_small);
    case SbmScheme::Medium: return k_out * static_cast<double>(n_small + n_large) / 2.0;
  }
  return 0.0;
}

SbmGraph gen_sbm(std::size_t n, double frac_small, double k_in, double c, SbmScheme scheme, Rng& rng) {
  if (n < 100) throw Error("SBM needs n >= 100");
  if (!(frac_small > 0.0 && frac_small <= 0.5)) throw Error("frac_small must lie in (0, 0.5]");
  if (!(k_in >= 0.0) || !(c > 0.0)) throw Error("SBM needs k_in >= 0 and c > 0");
  SbmGraph out;
  out.n_small = static_cast<std::size_t>(std::lround(frac_small * static_cast<double>(n)));
  out.n_large = n - out.n_small;
  if (out.n_small < 2) throw Error("smaller SBM group has fewer than 2 nodes");
  out.expected_cross_edges = sbm_expected_cross_edges(out.n_small, out.n_large, k_in, c, scheme);
  const double pairs = static_cast<double>(out.n_small) * static_cast<double>(out.n_large);
  if (out.expected_cross_edges > pairs) {
    throw Error("expected between-group edges exceed available pairs");
  }
  const double p_small = k_in / static_cast<double>(out.n_small - 1);
  const double p_large = k_in / static_cast<double>(out.n_large - 1);
  if (p_small > 1.0 || p_large > 1.0) throw Error("k_in exceeds group size");

  std::vector<Edge> edges;
  sample_gnp(out.n_small, p_small, 0, rng, edges);
  sample_gnp(out.n_large, p_large, static_cast<NodeId>(out.n_small), rng, edges);
  sample_bipartite(out.n_small, out.n_large, out.expected_cross_edges / pairs, 0,
                   static_cast<NodeId>(out.n_small), rng, edges);
  out.graph = Graph::from_edges(n, std::move(edges));
  out.block.assign(n, 1);
  std::fill(out.block.begin(), out.block.begin() + static_cast<std::ptrdiff_t>(out.n_small), 0);
  return out;
}

SbmGraph giant_component(const SbmGraph& sbm) {
  SbmGraph out;
  out.graph = preprocess(sbm.graph);
  out.expected_cross_edges = sbm.expected_cross_edges;
  out.block.reserve(out.graph.node_count());
  // Node labels still hold the original ids.
  for (std::size_t u = 0; u < out.graph.node_count(); ++u) {
    const auto original = std::stoul(out.graph.label(static_cast<NodeId>(u)));
    out.block.push_back(sbm.block.at(original));
    ++(out.block.back() == 0 ? out.n_small : out.n_large);
  }
  return out;
}

}  // namespace polar
