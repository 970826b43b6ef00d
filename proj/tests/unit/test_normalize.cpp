#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "polar/error.hpp"
#include "polar/normalize.hpp"
#include "polar/nullmodels.hpp"

using namespace polar;

TEST_CASE("summarize computes population moments") {
  const auto e = summarize(ScoreId::Q, {1.0, 2.0, 3.0, 4.0});
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.second_moment == doctest::Approx(7.5));
  CHECK(e.stddev == doctest::Approx(std::sqrt(1.25)));
  CHECK(e.std_error == doctest::Approx(std::sqrt(1.25) / 2.0));
  CHECK(e.n_samples() == 4);
}

TEST_CASE("summarize is order independent") {
  auto rng = make_rng(1, 0);
  std::vector<double> xs(1000);
  for (auto& x : xs) x = uniform01(rng) * 1e3 + 1e-6 * uniform01(rng);
  const auto a = summarize(ScoreId::Q, xs);
  std::shuffle(xs.begin(), xs.end(), rng);
  const auto b = summarize(ScoreId::Q, xs);
  CHECK(std::abs(a.mean - b.mean) <= 1e-12 * std::abs(a.mean));
  CHECK(std::abs(a.stddev - b.stddev) <= 1e-12 * a.stddev);
}

TEST_CASE("summarize of equal samples has zero spread") {
  const auto e = summarize(ScoreId::EI, std::vector<double>(7, 0.1));
  CHECK(e.mean == 0.1);
  CHECK(e.stddev == 0.0);
  CHECK(e.std_error == 0.0);
}

TEST_CASE("ensemble quantiles interpolate") {
  const auto e = summarize(ScoreId::Q, {4.0, 1.0, 3.0, 2.0, 5.0});
  CHECK(e.quantile(0.0) == 1.0);
  CHECK(e.quantile(0.5) == 3.0);
  CHECK(e.quantile(1.0) == 5.0);
  CHECK(e.quantile(0.125) == doctest::Approx(1.5));
}

TEST_CASE("denoise arithmetic") {
  SUBCASE("observed above the null mean") {
    const auto s = denoise(0.57, summarize(ScoreId::RWC, {0.25, 0.29}));
    CHECK(s.denoised == doctest::Approx(0.30));
    CHECK(s.null_mean == doctest::Approx(0.27));
    REQUIRE(s.standardized.has_value());
    CHECK(*s.standardized == doctest::Approx(0.30 / 0.02));
  }
  SUBCASE("observed below the null mean") {
    const auto s = denoise(0.68, summarize(ScoreId::RWC, {0.72, 0.76}));
    CHECK(s.denoised == doctest::Approx(-0.06));
  }
  SUBCASE("observed at the null mean") {
    const auto e = summarize(ScoreId::RWC, {0.1, 0.3});
    CHECK(denoise(e.mean, e).denoised == 0.0);
  }
  SUBCASE("zero variance") {
    const auto s = denoise(0.5, summarize(ScoreId::RWC, {0.2, 0.2, 0.2}));
    CHECK(s.denoised == doctest::Approx(0.3));
    CHECK_FALSE(s.standardized.has_value());
    CHECK(std::find(s.flags.begin(), s.flags.end(), "zero_variance_null") != s.flags.end());
  }
}

TEST_CASE("a star has a degenerate null ensemble") {
  NullModelOptions o;
  o.n_samples = 20;
  o.seed = 3;
  const Graph g = oracle::star(5);
  const auto report = normalize_scores(g, o);
  for (std::size_t i = 0; i < report.ensembles.size(); ++i) {
    const auto& e = report.ensembles[i];
    REQUIRE(e.ok());
    CHECK(e.stddev == 0.0);
    REQUIRE(report.normalized[i].has_value());
    const auto& flags = report.normalized[i]->flags;
    CHECK(std::find(flags.begin(), flags.end(), "zero_variance_null") != flags.end());
    CHECK(report.normalized[i]->denoised == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("ensembles are reproducible and independent of the worker count") {
  auto rng = make_rng(4, 0);
  const Graph g = gen_powerlaw(300, 2.5, 4.0, rng);
  NullModelOptions o;
  o.n_samples = 12;
  o.seed = 7;
  o.workers = 1;
  const auto a = null_ensembles(g, o);
  o.workers = 4;
  const auto b = null_ensembles(g, o);
  const auto c = null_ensembles_serial(g, o);
  REQUIRE(a.size() == 8);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].samples == b[i].samples);
    CHECK(a[i].samples == c[i].samples);
    CHECK(a[i].mean == b[i].mean);
  }
}

TEST_CASE("different seeds give different ensembles") {
  auto rng = make_rng(5, 0);
  const Graph g = gen_powerlaw(300, 2.5, 4.0, rng);
  NullModelOptions o;
  o.n_samples = 5;
  o.scores.scores = {ScoreId::EI};
  o.seed = 1;
  const auto a = null_ensemble(g, ScoreId::EI, o);
  o.seed = 2;
  const auto b = null_ensemble(g, ScoreId::EI, o);
  CHECK(a.samples != b.samples);
}

TEST_CASE("ensemble errors when too many samples fail") {
  // Every bisection of a 3-node path leaves a single-node block.
  NullModelOptions o;
  o.n_samples = 10;
  o.scores.scores = {ScoreId::AEI, ScoreId::EI};
  const auto es = null_ensembles(oracle::path(3), o);
  CHECK_FALSE(es[0].ok());
  CHECK(es[0].failed == 10);
  CHECK(es[1].ok());
  CHECK_THROWS_AS(null_ensemble(oracle::path(3), ScoreId::AEI, o), Error);
}

TEST_CASE("ensemble rejects too few samples") {
  NullModelOptions o;
  o.n_samples = 1;
  CHECK_THROWS_AS(null_ensembles(oracle::complete(4), o), Error);
}

TEST_CASE("normalize_scores denoises each score") {
  auto rng = make_rng(6, 0);
  const Graph g = gen_powerlaw(300, 2.5, 4.0, rng);
  NullModelOptions o;
  o.n_samples = 10;
  const auto r = normalize_scores(g, o);
  REQUIRE(r.raw.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    REQUIRE(r.normalized[i].has_value());
    CHECK(r.normalized[i]->denoised == r.raw[i].value - r.ensembles[i].mean);
    CHECK(r.ensembles[i].stddev >= 0.0);
    CHECK(r.ensembles[i].std_error <= r.ensembles[i].stddev);
    CHECK(r.ensembles[i].mean >= *std::min_element(r.ensembles[i].samples.begin(), r.ensembles[i].samples.end()));
  }
}
