#include <benchmark/benchmark.h>

#include "plucker/straightening.hpp"

using namespace plucker;

namespace {

// Straightens every non-standard tableau of V(m,n,k).
void BM_StraightenAll(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)),
            k = static_cast<int>(state.range(2));
  std::vector<RectTableau> inputs;
  for (const auto& v : canonical_basis(m, n, k))
    if (!is_standard(RectTableau(v))) inputs.emplace_back(v);
  for (auto _ : state)
    for (const auto& t : inputs) benchmark::DoNotOptimize(straighten(t).terms().size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_StraightenAll)->Args({2, 4, 2})->Args({2, 5, 2})->Args({3, 4, 2})->Unit(benchmark::kMillisecond);

}  // namespace
