#include <benchmark/benchmark.h>

#include <random>

#include "cliquemax/canonical.hpp"
#include "cliquemax/counting.hpp"
#include "cliquemax/enumerate.hpp"
#include "cliquemax/verify.hpp"

using namespace cliquemax;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_CountCliques(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_CountCliques)->Args({32, 4})->Args({48, 5})->Args({64, 6});

void BM_CliqueSpectrum(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(clique_spectrum(g));
}
BENCHMARK(BM_CliqueSpectrum)->Arg(32)->Arg(48);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalFormRegular(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRegular)->Arg(8)->Arg(16);

void BM_EnumerateAll(benchmark::State& state) {
  const auto config = EnumerationConfig::all_graphs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_graphs(config, [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateAll)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateMaxDegree(benchmark::State& state) {
  const auto config = EnumerationConfig::max_degree(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_graphs(config, [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateMaxDegree)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyProp(benchmark::State& state) {
  VerifyOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_prop_cmp(5, 3, 4, options));
}
BENCHMARK(BM_VerifyProp)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
