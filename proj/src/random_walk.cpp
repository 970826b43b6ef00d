#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "polar/error.hpp"
#include "polar/scores.hpp"

namespace polar {
namespace {

void check_partition(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  if (p.size_a() == 0 || p.size_b() == 0) throw Error("empty block");
}

double clamp_to(ScoreId id, double v) {
  const auto d = score_domain(id);
  if (v < d.lo && v > d.lo - 1e-9) return d.lo;
  if (v > d.hi && v < d.hi + 1e-9) return d.hi;
  return v;
}

ScoreResult walk_score(ScoreId id, const Graph& g, const Partition& p, std::size_t k_a,
                       std::size_t k_b) {
  const auto infl_a = top_degree_nodes(g, p, Block::A, k_a);
  const auto infl_b = top_degree_nodes(g, p, Block::B, k_b);
  const auto ap = absorption_probabilities(g, p, infl_a, infl_b);
  ScoreResult r;
  r.id = id;
  r.value = clamp_to(id, ap.p_aa * ap.p_bb - ap.p_ab * ap.p_ba);
  r.params["k_a"] = static_cast<double>(infl_a.size());
  r.params["k_b"] = static_cast<double>(infl_b.size());
  r.params["p_aa"] = ap.p_aa;
  r.params["p_bb"] = ap.p_bb;
  return r;
}

}  // namespace

std::vector<NodeId> top_degree_nodes(const Graph& g, const Partition& p, Block b,
                                     std::size_t count) {
  std::vector<NodeId> members;
  members.reserve(p.size(b));
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (p.block(static_cast<NodeId>(u)) == b) members.push_back(static_cast<NodeId>(u));
  }
  count = std::min(count, members.size());
  auto by_degree = [&](NodeId x, NodeId y) {
    const int dx = g.degree(x), dy = g.degree(y);
    return dx != dy ? dx > dy : x < y;
  };
  std::partial_sort(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(count),
                    members.end(), by_degree);
  members.resize(count);
  std::sort(members.begin(), members.end());
  return members;
}

std::size_t influencer_count(double fraction, std::size_t block_size) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw Error("influencer fraction must lie in (0, 1]");
  const auto k = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(block_size)));
  return std::min(std::max<std::size_t>(1, k), block_size);
}

AbsorptionProbabilities absorption_probabilities(const Graph& g, const Partition& p,
                                                 std::span<const NodeId> influencers_a,
                                                 std::span<const NodeId> influencers_b) {
  check_partition(g, p);
  const std::size_t n = g.node_count();
  if (influencers_a.empty() || influencers_b.empty()) throw Error("influencer sets must be non-empty");

  // target: 1 for A influencers, 0 for B influencers, -1 for transient nodes.
  std::vector<int> target(n, -1);
  for (NodeId u : influencers_a) {
    if (p.block(u) != Block::A) throw Error("influencer outside its block");
    target[u] = 1;
  }
  for (NodeId u : influencers_b) {
    if (p.block(u) != Block::B || target[u] >= 0) throw Error("influencer outside its block");
    target[u] = 0;
  }

  // Every transient node must reach an absorbing one.
  std::vector<std::uint8_t> reached(n, 0);
  std::vector<NodeId> queue;
  for (std::size_t u = 0; u < n; ++u) {
    if (target[u] >= 0) {
      reached[u] = 1;
      queue.push_back(static_cast<NodeId>(u));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId v : g.neighbors(queue[head])) {
      if (!reached[v]) {
        reached[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (queue.size() != n) throw Error("non-absorbing walk");

  std::vector<int> index(n, -1);
  int transient = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (target[u] < 0) index[u] = transient++;
  }

  std::vector<double> to_a(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    if (target[u] == 1) to_a[u] = 1.0;
  }
  if (transient > 0) {
    // (D - A) restricted to transient nodes; right side counts A influencers.
    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(transient);
    for (std::size_t u = 0; u < n; ++u) {
      const int i = index[u];
      if (i < 0) continue;
      triplets.emplace_back(i, i, static_cast<double>(g.degree(static_cast<NodeId>(u))));
      for (NodeId v : g.neighbors(static_cast<NodeId>(u))) {
        if (index[v] >= 0) triplets.emplace_back(i, index[v], -1.0);
        else if (target[v] == 1) rhs[i] += 1.0;
      }
    }
    Eigen::SparseMatrix<double> lap(transient, transient);
    lap.setFromTriplets(triplets.begin(), triplets.end());

    Eigen::VectorXd x = Eigen::VectorXd::Zero(transient);
    const double rhs_norm = rhs.norm();
    if (rhs_norm > 0) {
      Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
      cg.setTolerance(std::min(1e-12, 1e-10 / rhs_norm));
      cg.setMaxIterations(std::max<Eigen::Index>(1000, 20 * static_cast<Eigen::Index>(transient)));
      cg.compute(lap);
      x = cg.solve(rhs);
      if (cg.info() != Eigen::Success && (lap * x - rhs).norm() > 1e-10) {
        throw Error("absorption solve did not converge (residual " +
                    std::to_string((lap * x - rhs).norm()) + ")");
      }
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (index[u] >= 0) to_a[u] = std::clamp(x[index[u]], 0.0, 1.0);
    }
  }

  double sum_a = 0.0, sum_b = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    if (p.in_a(static_cast<NodeId>(u))) sum_a += to_a[u]; else sum_b += to_a[u];
  }
  AbsorptionProbabilities out;
  out.p_aa = sum_a / static_cast<double>(p.size_a());
  out.p_ab = 1.0 - out.p_aa;
  out.p_ba = sum_b / static_cast<double>(p.size_b());
  out.p_bb = 1.0 - out.p_ba;
  return out;
}

ScoreResult rwc(const Graph& g, const Partition& p, int k) {
  check_partition(g, p);
  if (k < 1) throw Error("RWC needs k >= 1");
  const auto kk = static_cast<std::size_t>(k);
  auto r = walk_score(ScoreId::RWC, g, p, std::min(kk, p.size_a()), std::min(kk, p.size_b()));
  r.params["k"] = k;
  return r;
}

ScoreResult arwc(const Graph& g, const Partition& p, double fraction) {
  check_partition(g, p);
  auto r = walk_score(ScoreId::ARWC, g, p, influencer_count(fraction, p.size_a()),
                      influencer_count(fraction, p.size_b()));
  r.params["K"] = fraction;
  return r;
}

double rwc_monte_carlo(const Graph& g, const Partition& p, int k, std::size_t walks, Rng& rng) {
  check_partition(g, p);
  const auto kk = static_cast<std::size_t>(std::max(k, 1));
  std::vector<int> absorbing(g.node_count(), -1);
  for (NodeId u : top_degree_nodes(g, p, Block::A, kk)) absorbing[u] = 0;
  for (NodeId u : top_degree_nodes(g, p, Block::B, kk)) absorbing[u] = 1;
  std::vector<NodeId> side[2];
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    side[p.in_a(static_cast<NodeId>(u)) ? 0 : 1].push_back(static_cast<NodeId>(u));
  }

  double started[2] = {0, 0};
  double ended[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t w = 0; w < walks; ++w) {
    const int s = coin(rng) ? 1 : 0;
    NodeId u = side[s][uniform_index(rng, side[s].size())];
    while (absorbing[u] < 0) {
      const auto nb = g.neighbors(u);
      u = nb[uniform_index(rng, nb.size())];
    }
    started[s] += 1;
    ended[s][absorbing[u]] += 1;
  }
  if (started[0] == 0 || started[1] == 0) throw Error("too few walks for both sides");
  const double p_aa = ended[0][0] / started[0], p_ab = ended[0][1] / started[0];
  const double p_ba = ended[1][0] / started[1], p_bb = ended[1][1] / started[1];
  return p_aa * p_bb - p_ab * p_ba;
}

}  // namespace polar
