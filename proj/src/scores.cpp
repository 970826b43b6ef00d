#include "polar/scores.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "polar/error.hpp"

namespace polar {
namespace {

void check_partition(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  if (p.size_a() == 0 || p.size_b() == 0) throw Error("empty block");
}

struct EdgeCounts {
  std::size_t internal_a = 0;
  std::size_t internal_b = 0;
  std::size_t cut = 0;
};

EdgeCounts count_edges(const Graph& g, const Partition& p) {
  EdgeCounts c;
  for (const auto& e : g.edges()) {
    const Block a = p.block(e.u), b = p.block(e.v);
    if (a != b) ++c.cut;
    else if (a == Block::A) ++c.internal_a;
    else ++c.internal_b;
  }
  return c;
}

}  // namespace

std::string_view to_string(ScoreId id) {
  switch (id) {
    case ScoreId::RWC: return "RWC";
    case ScoreId::ARWC: return "ARWC";
    case ScoreId::BCC: return "BCC";
    case ScoreId::BP: return "BP";
    case ScoreId::DP: return "DP";
    case ScoreId::Q: return "Q";
    case ScoreId::EI: return "EI";
    case ScoreId::AEI: return "AEI";
  }
  return "?";
}

ScoreId parse_score_id(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (ScoreId id : kAllScores) {
    if (to_string(id) == upper) return id;
  }
  throw Error("unknown score '" + std::string(name) + "'");
}

Domain score_domain(ScoreId id) {
  switch (id) {
    case ScoreId::RWC:
    case ScoreId::ARWC:
    case ScoreId::EI:
    case ScoreId::AEI: return {-1.0, 1.0};
    case ScoreId::BCC:
    case ScoreId::DP: return {0.0, 1.0};
    case ScoreId::BP: return {-0.5, 0.5};
    case ScoreId::Q: return {-0.5, 1.0};
  }
  return {-1.0, 1.0};
}

bool ScoreResult::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

ScoreResult bp(const Graph& g, const Partition& p) {
  check_partition(g, p);
  const std::size_t n = g.node_count();
  // A node is "sheltered" when none of its neighbors lie on the other side.
  std::vector<std::uint8_t> crosses(n, 0);
  std::size_t cut = 0;
  for (const auto& e : g.edges()) {
    if (p.block(e.u) != p.block(e.v)) {
      crosses[e.u] = crosses[e.v] = 1;
      ++cut;
    }
  }
  std::vector<std::uint8_t> boundary(n, 0);
  std::size_t boundary_count = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!crosses[u]) continue;
    for (NodeId w : g.neighbors(static_cast<NodeId>(u))) {
      if (p.block(w) == p.block(static_cast<NodeId>(u)) && !crosses[w]) {
        boundary[u] = 1;
        ++boundary_count;
        break;
      }
    }
  }

  ScoreResult r;
  r.id = ScoreId::BP;
  r.params["boundary_nodes"] = static_cast<double>(boundary_count);
  if (boundary_count == 0) {
    if (cut > 0) {
      r.value = -0.5;
      r.flags.push_back("no_qualifying_boundary");
    } else {
      r.value = 0.5;
      r.flags.push_back("disconnected_blocks");
    }
    return r;
  }
  // d_I: neighbors on the own side with no cross edge; d_C: neighbors across.
  double sum = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!boundary[u]) continue;
    std::size_t internal = 0, across = 0;
    for (NodeId v : g.neighbors(static_cast<NodeId>(u))) {
      if (p.block(v) != p.block(static_cast<NodeId>(u))) ++across;
      else if (!crosses[v]) ++internal;
    }
    sum += static_cast<double>(internal) / static_cast<double>(internal + across);
  }
  r.value = sum / static_cast<double>(boundary_count) - 0.5;
  return r;
}

DipoleOpinions dipole_opinions(const Graph& g, const Partition& p, double fraction,
                               double tolerance, std::size_t max_iter) {
  check_partition(g, p);
  const std::size_t n = g.node_count();
  if (max_iter == 0) max_iter = 10 * n;
  DipoleOpinions out;
  out.opinion.assign(n, 0.0);
  std::vector<std::uint8_t> fixed(n, 0);
  for (NodeId u : top_degree_nodes(g, p, Block::A, influencer_count(fraction, p.size_a()))) {
    out.opinion[u] = 1.0;
    fixed[u] = 1;
  }
  for (NodeId u : top_degree_nodes(g, p, Block::B, influencer_count(fraction, p.size_b()))) {
    out.opinion[u] = -1.0;
    fixed[u] = 1;
  }
  std::vector<NodeId> free_nodes;
  for (std::size_t u = 0; u < n; ++u) {
    if (!fixed[u]) free_nodes.push_back(static_cast<NodeId>(u));
  }
  if (free_nodes.empty()) return out;

  std::vector<double> next = out.opinion;
  while (true) {
    double change = 0.0;
    for (NodeId u : free_nodes) {
      const auto nb = g.neighbors(u);
      double s = 0.0;
      for (NodeId v : nb) s += out.opinion[v];
      const double value = nb.empty() ? 0.0 : s / static_cast<double>(nb.size());
      change = std::max(change, std::abs(value - out.opinion[u]));
      next[u] = value;
    }
    std::swap(out.opinion, next);
    ++out.iterations;
    out.last_change = change;
    if (change < tolerance) return out;
    if (out.iterations >= max_iter) {
      throw Error("label propagation did not converge after " + std::to_string(max_iter) +
                  " iterations (residual " + std::to_string(change) + ")");
    }
  }
}

ScoreResult dp(const Graph& g, const Partition& p, double fraction, double tolerance,
               std::size_t max_iter) {
  const auto op = dipole_opinions(g, p, fraction, tolerance, max_iter);
  double pos_sum = 0.0, neg_sum = 0.0;
  std::size_t pos = 0, neg = 0;
  for (double r : op.opinion) {
    if (r > 0) {
      pos_sum += r;
      ++pos;
    } else if (r < 0) {
      neg_sum += r;
      ++neg;
    }
  }
  const double gc_pos = pos ? pos_sum / static_cast<double>(pos) : 0.0;
  const double gc_neg = neg ? neg_sum / static_cast<double>(neg) : 0.0;
  const double distance = std::abs(gc_pos - gc_neg) / 2.0;
  const double imbalance =
      std::abs(static_cast<double>(pos) - static_cast<double>(neg)) / static_cast<double>(g.node_count());

  ScoreResult r;
  r.id = ScoreId::DP;
  r.value = std::clamp((1.0 - imbalance) * distance, 0.0, 1.0);
  r.params["K"] = fraction;
  r.params["tol"] = tolerance;
  r.params["iterations"] = static_cast<double>(op.iterations);
  r.params["distance"] = distance;
  r.params["delta_a"] = imbalance;
  r.params["k_a"] = static_cast<double>(influencer_count(fraction, p.size_a()));
  r.params["k_b"] = static_cast<double>(influencer_count(fraction, p.size_b()));
  return r;
}

ScoreResult modularity(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  const double m = static_cast<double>(g.edge_count());
  if (m == 0) throw Error("modularity of a graph without edges");
  const auto c = count_edges(g, p);
  double volume_a = 0.0, volume_b = 0.0;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    (p.in_a(static_cast<NodeId>(u)) ? volume_a : volume_b) += g.degree(static_cast<NodeId>(u));
  }
  const double a = volume_a / (2 * m), b = volume_b / (2 * m);
  ScoreResult r;
  r.id = ScoreId::Q;
  r.value = static_cast<double>(c.internal_a) / m - a * a + static_cast<double>(c.internal_b) / m - b * b;
  return r;
}

ScoreResult ei_index(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  if (g.edge_count() == 0) throw Error("E-I index of a graph without edges");
  const auto c = count_edges(g, p);
  const double internal = static_cast<double>(c.internal_a + c.internal_b);
  const double external = static_cast<double>(c.cut);
  ScoreResult r;
  r.id = ScoreId::EI;
  r.value = (internal - external) / (internal + external);
  return r;
}

ScoreResult aei_index(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  if (p.size_a() < 2 || p.size_b() < 2) throw Error("degenerate block");
  const auto c = count_edges(g, p);
  const double na = static_cast<double>(p.size_a()), nb = static_cast<double>(p.size_b());
  const double sigma_aa = static_cast<double>(c.internal_a) / (na * (na - 1) / 2);
  const double sigma_bb = static_cast<double>(c.internal_b) / (nb * (nb - 1) / 2);
  const double sigma_ab = static_cast<double>(c.cut) / (na * nb);
  const double inside = sigma_aa + sigma_bb, across = 2 * sigma_ab;
  if (inside + across == 0) throw Error("adaptive E-I index undefined without edges");
  ScoreResult r;
  r.id = ScoreId::AEI;
  r.value = (inside - across) / (inside + across);
  return r;
}

ScoreResult compute_score(ScoreId id, const Graph& g, const Partition& p, const ScoreConfig& config) {
  switch (id) {
    case ScoreId::RWC: return rwc(g, p, config.rwc_k);
    case ScoreId::ARWC: return arwc(g, p, config.arwc_fraction);
    case ScoreId::BCC: return bcc(g, p);
    case ScoreId::BP: return bp(g, p);
    case ScoreId::DP: return dp(g, p, config.dp_fraction, config.dp_tolerance, config.dp_max_iter);
    case ScoreId::Q: return modularity(g, p);
    case ScoreId::EI: return ei_index(g, p);
    case ScoreId::AEI: return aei_index(g, p);
  }
  throw Error("unknown score");
}

std::vector<ScoreResult> score_all(const Graph& g, const Partition& p, const ScoreConfig& config) {
  std::vector<ScoreResult> out;
  out.reserve(config.scores.size());
  for (ScoreId id : config.scores) {
    try {
      out.push_back(compute_score(id, g, p, config));
    } catch (const std::exception& e) {
      ScoreResult r;
      r.id = id;
      r.value = std::numeric_limits<double>::quiet_NaN();
      r.error = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace polar
