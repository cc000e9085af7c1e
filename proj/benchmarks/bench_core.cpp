#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "turan/builder.hpp"
#include "turan/census.hpp"
#include "turan/clean.hpp"
#include "turan/embedder.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/hkl.hpp"
#include "turan/oracles.hpp"
#include "turan/weave.hpp"

namespace {

turan::Graph er(int n, double p, std::uint64_t seed) {
  turan::HostSpec spec;
  spec.model = "erdos-renyi";
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return turan::generate_host(spec).graph;
}

void BM_HomCycleCount(benchmark::State& state) {
  turan::Graph g = er(static_cast<int>(state.range(0)), 0.1, 7);
  int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::hom_cycle_count(g, k));
  }
}
BENCHMARK(BM_HomCycleCount)->Args({100, 2})->Args({200, 2})->Args({200, 4});

void BM_C4Census(benchmark::State& state) {
  turan::Graph g = er(static_cast<int>(state.range(0)), 0.15, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::c4_census(g));
  }
}
BENCHMARK(BM_C4Census)->Arg(60)->Arg(120);

void BM_GenuineEightCycles(benchmark::State& state) {
  turan::Graph g = er(static_cast<int>(state.range(0)), 0.3, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::genuine_cycle_count_labeled(g, 4, 0));
  }
}
BENCHMARK(BM_GenuineEightCycles)->Arg(16)->Arg(20);

void BM_CleanC4s(benchmark::State& state) {
  turan::Graph g = er(static_cast<int>(state.range(0)), 0.2, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::clean_c4s(g));
  }
}
BENCHMARK(BM_CleanC4s)->Arg(40)->Arg(80);

void BM_EmbedSearch(benchmark::State& state) {
  turan::HklGraph pattern = turan::build_hkl(1, 2);
  turan::HostSpec spec;
  spec.model = "planted-pattern-plus-noise";
  spec.n = static_cast<int>(state.range(0));
  spec.p = 0.05;
  spec.seed = 19;
  spec.pattern = pattern.graph;
  turan::Graph host = turan::generate_host(spec).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::embed_bruteforce(pattern.graph, host, 0));
  }
}
BENCHMARK(BM_EmbedSearch)->Arg(32)->Arg(40);

void BM_WeaveRoundTrip(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::vector<int> y(static_cast<size_t>(4 * k)), z(static_cast<size_t>(4 * k));
  for (int i = 0; i < 4 * k; ++i) {
    y[static_cast<size_t>(i)] = i;
    z[static_cast<size_t>(i)] = 4 * k + i;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::unweave(turan::weave(y, z, k), k));
  }
}
BENCHMARK(BM_WeaveRoundTrip)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
