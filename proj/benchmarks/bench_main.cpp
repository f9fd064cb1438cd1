#include <benchmark/benchmark.h>

#include <random>

#include "invforms/gflinalg.hpp"
#include "invforms/killing.hpp"
#include "invforms/sympforms.hpp"
#include "invforms/tensoralg.hpp"

using namespace invforms;

namespace {

gf::PrimeMatrix random_gf2(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  gf::PrimeMatrix m(2, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::int64_t>(rng() & 1));
  return m;
}

void BM_RankPacked(benchmark::State& state) {
  const auto m = random_gf2(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gf::row_reduce(m).pivots.size());
}
BENCHMARK(BM_RankPacked)->Arg(64)->Arg(256)->Arg(512);

void BM_RankGeneric(benchmark::State& state) {
  const auto m = random_gf2(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gf::row_reduce_generic(m).pivots.size());
}
BENCHMARK(BM_RankGeneric)->Arg(64)->Arg(256)->Arg(512);

void BM_AdjointTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(killing::adjoint_table(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_AdjointTable)->Arg(12)->Arg(24);

void BM_GeneratorSubmodule(benchmark::State& state) {
  const symp::SymplecticSpace sp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symp::generator_submodule(sp, static_cast<int>(state.range(1))).dim());
}
BENCHMARK(BM_GeneratorSubmodule)->Args({3, 3})->Args({4, 3})->Args({5, 5});

void BM_SymmetricPowerDims(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tensor::symmetric_power_dims(static_cast<int>(state.range(0)), 5).symmetrized);
}
BENCHMARK(BM_SymmetricPowerDims)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
