#include <benchmark/benchmark.h>

#include <random>

#include "wafomlab/netgen.hpp"
#include "wafomlab/search.hpp"
#include "wafomlab/wafom.hpp"

namespace {

wafomlab::SequentialGenerator make_generator(int d) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(d));
  return {wafomlab::random_primitive_poly(d, rng), wafomlab::random_full_rank_matrix(d, 30, rng), 4};
}

void BM_Sequential(benchmark::State& state) {
  const auto gen = make_generator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wafomlab::wafom_sequential(gen).value);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_Inversion(benchmark::State& state) {
  const auto net = wafomlab::generator_net(make_generator(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(wafomlab::wafom_inversion(net, {.threads = 1}).value);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

}  // namespace

BENCHMARK(BM_Sequential)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Inversion)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
