#include <benchmark/benchmark.h>

#include "plucker/exact_linalg.hpp"
#include "plucker/sampling.hpp"

using namespace plucker;

namespace {

void BM_RationalRank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const RMatrix m = random_integer_matrix(rng, size, size);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(20)->Arg(40)->Arg(80);

void BM_IntegerRank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const RMatrix m = random_integer_matrix(rng, size, size);
  std::vector<IVector> rows;
  for (std::size_t i = 0; i < size; ++i) rows.push_back(integer_row(m.row(i)));
  for (auto _ : state) benchmark::DoNotOptimize(integer_rank(rows, size));
}
BENCHMARK(BM_IntegerRank)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

}  // namespace
