#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "polar/error.hpp"
#include "polar/scores.hpp"

namespace polar {
namespace {

constexpr std::size_t kGridPoints = 512;
constexpr double kDensityFloor = 1e-12;
// Kernel contributions beyond this many bandwidths are below 1e-27.
constexpr double kKernelReach = 11.0;

struct Sample {
  std::vector<double> values;  // sorted
  double bandwidth = 1.0;
};

double pooled_range(std::span<const double> a, std::span<const double> b) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (auto s : {a, b}) {
    for (double v : s) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi > lo ? hi - lo : 0.0;
}

Sample make_sample(std::span<const double> values, double fallback) {
  Sample s;
  s.values.assign(values.begin(), values.end());
  std::sort(s.values.begin(), s.values.end());
  const auto m = static_cast<double>(s.values.size());
  double sd = 0.0;
  if (s.values.size() > 1) {
    double mean = 0.0;
    for (double v : s.values) mean += v;
    mean /= m;
    double ss = 0.0;
    for (double v : s.values) ss += (v - mean) * (v - mean);
    sd = std::sqrt(ss / (m - 1.0));
  }
  // Scott's rule.
  s.bandwidth = sd > 0 ? sd * std::pow(m, -0.2) : fallback;
  return s;
}

std::vector<double> density_on(const Sample& s, const std::vector<double>& grid) {
  std::vector<double> f(grid.size(), 0.0);
  const double h = s.bandwidth;
  const double norm = 1.0 / (static_cast<double>(s.values.size()) * h * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    auto lo = std::lower_bound(s.values.begin(), s.values.end(), x - kKernelReach * h);
    auto hi = std::upper_bound(lo, s.values.end(), x + kKernelReach * h);
    double acc = 0.0;
    for (auto it = lo; it != hi; ++it) {
      const double z = (x - *it) / h;
      acc += std::exp(-0.5 * z * z);
    }
    f[i] = std::max(acc * norm, kDensityFloor);
  }
  return f;
}

double trapezoid(const std::vector<double>& y, double dx) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) s += 0.5 * (y[i] + y[i + 1]) * dx;
  return s;
}

}  // namespace

double kde_kl_divergence(std::span<const double> p_sample, std::span<const double> q_sample) {
  if (p_sample.empty() || q_sample.empty()) throw Error("KL divergence of an empty sample");
  const double range = pooled_range(p_sample, q_sample);
  const double fallback = range > 0 ? 0.1 * range : 1.0;
  const Sample p = make_sample(p_sample, fallback);
  const Sample q = make_sample(q_sample, fallback);

  const double lo = std::min(p.values.front() - 3 * p.bandwidth, q.values.front() - 3 * q.bandwidth);
  const double hi = std::max(p.values.back() + 3 * p.bandwidth, q.values.back() + 3 * q.bandwidth);
  const double dx = (hi - lo) / static_cast<double>(kGridPoints - 1);
  std::vector<double> grid(kGridPoints);
  for (std::size_t i = 0; i < kGridPoints; ++i) grid[i] = lo + dx * static_cast<double>(i);

  auto fp = density_on(p, grid);
  auto fq = density_on(q, grid);
  const double zp = trapezoid(fp, dx), zq = trapezoid(fq, dx);
  std::vector<double> integrand(kGridPoints);
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    const double a = fp[i] / zp, b = fq[i] / zq;
    integrand[i] = a * std::log(a / b);
  }
  return std::max(0.0, trapezoid(integrand, dx));
}

ScoreResult bcc_from_centrality(const Graph& g, const Partition& p,
                                std::span<const double> centrality) {
  if (centrality.size() != g.edge_count()) throw Error("centrality does not match edges");
  std::vector<double> cut, rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    (p.block(ed.u) != p.block(ed.v) ? cut : rest).push_back(centrality[e]);
  }
  ScoreResult r;
  r.id = ScoreId::BCC;
  r.params["grid_points"] = static_cast<double>(kGridPoints);
  r.params["cut_edges"] = static_cast<double>(cut.size());
  if (cut.empty()) {
    r.value = 1.0;
    r.flags.push_back("empty_cut");
    return r;
  }
  if (rest.empty()) {
    r.value = 0.0;
    r.flags.push_back("empty_noncut");
    return r;
  }
  const double kl = kde_kl_divergence(cut, rest);
  r.params["kl"] = kl;
  r.value = std::clamp(1.0 - std::exp(-kl), 0.0, 1.0);
  return r;
}

ScoreResult bcc(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  if (g.edge_count() == 0) throw Error("BCC needs at least one edge");
  return bcc_from_centrality(g, p, edge_betweenness(g));
}

}  // namespace polar
