// Serial reference vs OpenMP kernels.
//   bench_kernels --benchmark_filter=Betweenness
#include <benchmark/benchmark.h>

#include <omp.h>

#include "polar/normalize.hpp"
#include "polar/nullmodels.hpp"
#include "polar/scores.hpp"

using namespace polar;

namespace {

Graph er_graph(std::size_t n, double mean_degree) {
  Rng rng = make_rng(42, n);
  return preprocess(gen_er(n, static_cast<std::size_t>(n * mean_degree / 2), rng));
}

void BM_BetweennessSerial(benchmark::State& state) {
  const Graph g = er_graph(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(edge_betweenness_serial(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}

void BM_BetweennessParallel(benchmark::State& state) {
  const Graph g = er_graph(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(edge_betweenness(g));
  state.counters["threads"] = omp_get_max_threads();
}

NullModelOptions ensemble_options() {
  NullModelOptions o;
  o.n_samples = 16;
  o.seed = 7;
  return o;
}

void BM_EnsembleSerial(benchmark::State& state) {
  const Graph g = er_graph(static_cast<std::size_t>(state.range(0)), 4);
  const auto o = ensemble_options();
  for (auto _ : state) benchmark::DoNotOptimize(null_ensembles_serial(g, o));
}

void BM_EnsembleParallel(benchmark::State& state) {
  const Graph g = er_graph(static_cast<std::size_t>(state.range(0)), 4);
  const auto o = ensemble_options();
  for (auto _ : state) benchmark::DoNotOptimize(null_ensembles(g, o));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_BetweennessSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
