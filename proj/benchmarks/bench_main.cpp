#include <benchmark/benchmark.h>

#include <random>

#include "kneserlab/kneserlab.hpp"

using namespace kneserlab;

namespace {

void BM_EnumerateRSets(benchmark::State& state) {
  const auto params = make_params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (const auto& s : enumerate_rsets(params)) acc ^= s.bits();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(params.n, params.r)));
}
BENCHMARK(BM_EnumerateRSets)->Args({12, 4})->Args({16, 5})->Args({20, 6});

void BM_Components(benchmark::State& state) {
  const auto params = make_params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Family none(params.n, params.r);
  for (auto _ : state) benchmark::DoNotOptimize(components_avoiding(params, none));
}
BENCHMARK(BM_Components)->Args({9, 3})->Args({11, 4})->Args({13, 5});

void BM_MinCutFlow(benchmark::State& state) {
  const auto params = make_params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int cap = static_cast<int>(binomial(params.n - params.r, params.r));
  for (auto _ : state) benchmark::DoNotOptimize(min_disconnecting_set(params, cap));
}
BENCHMARK(BM_MinCutFlow)->Args({6, 2})->Args({7, 3})->Args({8, 3})->Args({9, 4})->Unit(benchmark::kMillisecond);

void BM_BuildChain(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int l = static_cast<int>(state.range(1));
  const auto params = make_params(2 * r + l, r);
  const auto masks = all_rset_masks(params);
  std::mt19937_64 rng(7);
  std::vector<std::pair<RSet, RSet>> pairs;
  for (int i = 0; i < 64; ++i) {
    const Mask a = masks[rng() % masks.size()];
    Mask b = a;
    while (b == a) b = masks[rng() % masks.size()];
    pairs.emplace_back(RSet(a, params.n), RSet(b, params.n));
  }
  const Family none(params.n, r);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(build_chain(params, none, a, b));
  }
}
BENCHMARK(BM_BuildChain)->Args({3, 2})->Args({4, 3})->Args({6, 4})->Args({6, 8});

void BM_CrossIntersecting(benchmark::State& state) {
  const auto params = make_params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto pair = large_r_pair(params);
  for (auto _ : state) benchmark::DoNotOptimize(are_cross_intersecting(pair.a, pair.b));
}
BENCHMARK(BM_CrossIntersecting)->Args({10, 4})->Args({14, 6});

}  // namespace
BENCHMARK_MAIN();
