#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "polar/error.hpp"
#include "polar/nullmodels.hpp"

using namespace polar;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degree_sequence();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("G(n,m) with every pair is complete") {
  auto rng = make_rng(1, 0);
  const Graph g = gen_er(4, 6, rng);
  CHECK(g.edge_count() == 6);
  for (NodeId u = 0; u < 4; ++u) CHECK(g.degree(u) == 3);
}

TEST_CASE("G(n,m) with no edges") {
  auto rng = make_rng(1, 0);
  const Graph g = gen_er(3, 0, rng);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("G(n,m) rejects too many edges") {
  auto rng = make_rng(1, 0);
  CHECK_THROWS_AS(gen_er(4, 7, rng), Error);
}

TEST_CASE("G(n,m) degree moments match the hypergeometric law") {
  const std::size_t n = 1000, m = 1200;
  const double pairs = double(n) * double(n - 1) / 2.0;
  const double p = double(m) / pairs;
  // Each node's degree counts its n-1 pairs among m draws without replacement.
  const double var = double(n - 1) * p * (1 - p) * (pairs - double(n - 1)) / (pairs - 1);
  double var_sum = 0;
  const int samples = 100;
  for (int s = 0; s < samples; ++s) {
    auto rng = make_rng(2, std::uint64_t(s));
    const Graph g = gen_er(n, m, rng);
    CHECK(g.mean_degree() == doctest::Approx(2.4));
    double ss = 0;
    for (int d : g.degree_sequence()) ss += (d - 2.4) * (d - 2.4);
    var_sum += ss / double(n);
  }
  CHECK(var_sum / samples == doctest::Approx(var).epsilon(0.03));
}

TEST_CASE("G(n,m) complement branch gives a uniform edge count") {
  auto rng = make_rng(3, 0);
  const Graph g = gen_er(30, 400, rng);
  CHECK(g.edge_count() == 400);
}

TEST_CASE("configuration sampler preserves the degree sequence") {
  auto rng = make_rng(4, 0);
  const Graph g = gen_powerlaw(400, 2.5, 4.0, rng);
  for (int s = 0; s < 100; ++s) {
    const Graph h = sample_configuration(g, rng);
    REQUIRE(h.degree_sequence() == g.degree_sequence());
    REQUIRE(h.edge_count() == g.edge_count());
  }
}

TEST_CASE("configuration sampler moves edges") {
  auto rng = make_rng(5, 0);
  const Graph g = gen_er(200, 600, rng);
  const Graph h = sample_configuration(g, rng);
  std::size_t kept = 0;
  for (const auto& e : h.edges()) kept += g.has_edge(e.u, e.v);
  CHECK(kept < g.edge_count() / 10);
}

TEST_CASE("configuration sampler keeps unique realizations") {
  auto rng = make_rng(6, 0);
  const Graph s = oracle::star(5);
  for (int i = 0; i < 10; ++i) {
    const Graph h = sample_configuration(s, rng);
    CHECK(h.degree(0) == 5);
    CHECK(std::equal(h.edges().begin(), h.edges().end(), s.edges().begin(), s.edges().end()));
  }
  const Graph t = oracle::complete(3);
  CHECK(sample_configuration(t, rng).edge_count() == 3);
}

TEST_CASE("dk2 sampler preserves the joint degree matrix") {
  auto rng = make_rng(7, 0);
  const Graph g = gen_powerlaw(400, 2.5, 4.0, rng);
  const auto jdm = joint_degree_matrix(g);
  for (int s = 0; s < 100; ++s) {
    const Graph h = sample_dk2(g, rng);
    REQUIRE(joint_degree_matrix(h) == jdm);
    REQUIRE(h.degree_sequence() == g.degree_sequence());
  }
}

TEST_CASE("dk2 sampler on a regular graph still rewires") {
  auto rng = make_rng(8, 0);
  // A 4-regular circulant graph on 40 nodes.
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 40; ++u) {
    for (NodeId step : {1, 2}) {
      const NodeId v = NodeId((u + step) % 40);
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  const Graph g = Graph::from_edges(40, edges);
  const Graph h = sample_dk2(g, rng);
  std::size_t kept = 0;
  for (const auto& e : h.edges()) kept += g.has_edge(e.u, e.v);
  CHECK(kept < g.edge_count() / 2);
  CHECK(h.degree_sequence() == g.degree_sequence());
}

TEST_CASE("dk2 sampler on a path returns a path") {
  auto rng = make_rng(9, 0);
  const Graph p = oracle::path(4);
  for (int i = 0; i < 20; ++i) {
    const Graph h = sample_dk2(p, rng);
    CHECK(is_connected(h));
    CHECK(sorted_degrees(h) == std::vector<int>{1, 1, 2, 2});
    CHECK(joint_degree_matrix(h) == joint_degree_matrix(p));
  }
}

TEST_CASE("randomize dispatches on the dk level") {
  auto rng = make_rng(10, 0);
  const Graph g = gen_powerlaw(300, 2.5, 4.0, rng);
  const Graph d0 = randomize(g, 0, rng);
  CHECK(d0.node_count() == g.node_count());
  CHECK(d0.edge_count() == g.edge_count());
  CHECK(d0.labels() == g.labels());
  CHECK(randomize(g, 1, rng).degree_sequence() == g.degree_sequence());
  CHECK(joint_degree_matrix(randomize(g, 2, rng)) == joint_degree_matrix(g));
  CHECK_THROWS_AS(randomize(g, 3, rng), Error);
}

TEST_CASE("power-law mixture hits the target mean") {
  for (double gamma : {2.1, 2.5, 3.0}) {
    for (double target : {4.0, 5.5, 7.5}) {
      const auto mix = fit_power_law_mean(1000, gamma, target);
      CHECK(mix.mean() == doctest::Approx(target).epsilon(1e-12));
      const auto p = mix.pmf();
      double total = 0;
      for (double x : p) {
        CHECK(x >= 0.0);
        total += x;
      }
      CHECK(total == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("power-law mixture rejects infeasible targets") {
  CHECK_THROWS_AS(fit_power_law_mean(1000, 2.0, 4.0), Error);
  try {
    fit_power_law_mean(1000, 3.0, 1.01);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("feasible range") != std::string::npos);
  }
}

TEST_CASE("power-law law collapses onto k_min for large exponents") {
  const auto mix = fit_power_law_mean(1000, 40.0, 2.0);
  // Nearly all mass sits on k = 2 whichever k_min the fit settles on.
  CHECK(mix.k_min <= 2);
  CHECK(mix.pmf()[2 - mix.k_min] > 0.999);
}

TEST_CASE("power-law graphs realize the target mean degree") {
  double total = 0;
  const int samples = 50;
  for (int s = 0; s < samples; ++s) {
    auto rng = make_rng(11, std::uint64_t(s));
    total += gen_powerlaw(1000, 3.0, 4.0, rng).mean_degree();
  }
  CHECK(std::abs(total / samples - 4.0) <= 0.2);
}

TEST_CASE("sampled degree sums are even") {
  auto rng = make_rng(12, 0);
  for (int s = 0; s < 20; ++s) {
    const auto k = sample_power_law_degrees(101, 2.5, 4.0, rng);
    long sum = 0;
    for (int x : k) sum += x;
    CHECK(sum % 2 == 0);
  }
}

TEST_CASE("SBM expected cross-edge totals") {
  CHECK(sbm_expected_cross_edges(3000, 7000, 4.5, 25, SbmScheme::High) == doctest::Approx(540.0));
  const double low = sbm_expected_cross_edges(1000, 9000, 4.5, 25, SbmScheme::Low);
  const double high = sbm_expected_cross_edges(1000, 9000, 4.5, 25, SbmScheme::High);
  CHECK(low / high == doctest::Approx(9.0));
  for (auto s : {SbmScheme::Low, SbmScheme::High}) {
    CHECK(sbm_expected_cross_edges(5000, 5000, 4.5, 25, s) ==
          doctest::Approx(sbm_expected_cross_edges(5000, 5000, 4.5, 25, SbmScheme::Medium)));
  }
}

TEST_CASE("SBM draws match their expectations") {
  double cross = 0, within_small = 0, within_large = 0;
  const int samples = 10;
  for (int s = 0; s < samples; ++s) {
    auto rng = make_rng(13, std::uint64_t(s));
    const auto sbm = gen_sbm(10000, 0.3, 4.5, 25, SbmScheme::High, rng);
    CHECK(sbm.n_small == 3000);
    for (const auto& e : sbm.graph.edges()) {
      if (sbm.block[e.u] != sbm.block[e.v]) cross += 1;
      else if (sbm.block[e.u] == 0) within_small += 1;
      else within_large += 1;
    }
  }
  CHECK(cross / samples == doctest::Approx(540.0).epsilon(0.05));
  CHECK(2 * within_small / samples / 3000 == doctest::Approx(4.5).epsilon(0.02));
  CHECK(2 * within_large / samples / 7000 == doctest::Approx(4.5).epsilon(0.02));
}

TEST_CASE("SBM giant component keeps the planted groups") {
  auto rng = make_rng(14, 0);
  const auto sbm = gen_sbm(2000, 0.2, 2.0, 25, SbmScheme::Medium, rng);
  const auto gc = giant_component(sbm);
  CHECK(is_connected(gc.graph));
  CHECK(gc.graph.node_count() < 2000);
  CHECK(gc.n_small + gc.n_large == gc.graph.node_count());
  for (std::size_t u = 0; u < gc.graph.node_count(); ++u) {
    const auto original = std::stoul(gc.graph.label(NodeId(u)));
    CHECK(gc.block[u] == (original < 400 ? 0 : 1));
  }
}

TEST_CASE("SBM rejects infeasible parameters") {
  auto rng = make_rng(15, 0);
  CHECK_THROWS_AS(gen_sbm(1000, 0.6, 4.5, 25, SbmScheme::High, rng), Error);
  CHECK_THROWS_AS(gen_sbm(1000, 0.1, 4.5, 0.0001, SbmScheme::Low, rng), Error);
}

TEST_CASE("generators are deterministic per seed") {
  auto r1 = make_rng(16, 3), r2 = make_rng(16, 3);
  const Graph a = gen_powerlaw(500, 2.5, 4.0, r1);
  const Graph b = gen_powerlaw(500, 2.5, 4.0, r2);
  CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
}
