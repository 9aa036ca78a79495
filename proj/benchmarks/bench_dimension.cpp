#include <benchmark/benchmark.h>

#include "plucker/straightening.hpp"

using namespace plucker;

namespace {

void BM_Oracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)),
            k = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(dim_v0_oracle(m, n, k, 0).dimension);
}
BENCHMARK(BM_Oracle)->Args({2, 4, 2})->Args({3, 5, 2})->Args({2, 6, 3})->Unit(benchmark::kMillisecond);

void BM_ChainRanks(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)),
            k = static_cast<int>(state.range(2));
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& c : enumerate_chains(m, n, k)) total += chain_rank(c, m, n, k, 0);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ChainRanks)->Args({2, 4, 2})->Args({3, 5, 2})->Args({2, 6, 3})->Unit(benchmark::kMillisecond);

void BM_Basis(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)),
            k = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(v0_basis(m, n, k).size());
}
BENCHMARK(BM_Basis)->Args({2, 4, 2})->Args({3, 5, 3})->Unit(benchmark::kMillisecond);

}  // namespace
