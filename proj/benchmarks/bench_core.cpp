#include <benchmark/benchmark.h>

#include "abinitio/canonical.hpp"
#include "abinitio/chain.hpp"
#include "abinitio/geometry.hpp"
#include "abinitio/predim.hpp"
#include "abinitio/random.hpp"

using namespace abinitio;

namespace {

SStructure sample(ClassId c, std::size_t size) { return random_structure(c, 3, size, 0.35, 42 + size); }

void BM_PredimTable(benchmark::State& state) {
  const auto a = sample(ClassId::CLQ, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const PredimTable t(a);
    benchmark::DoNotOptimize(t.all_predims());
  }
}
BENCHMARK(BM_PredimTable)->DenseRange(6, 14, 2);

void BM_IsStrong(benchmark::State& state) {
  const auto a = sample(ClassId::CLQ, static_cast<std::size_t>(state.range(0)));
  const PredimTable t(a);
  Mask x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(strength(t, x & t.full_mask()));
    x = x * 2654435761U + 1;
  }
}
BENCHMARK(BM_IsStrong)->DenseRange(6, 14, 2);

void BM_GeometryOf(benchmark::State& state) {
  const auto a = sample(ClassId::CLQ, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geometry_of(a));
}
BENCHMARK(BM_GeometryOf)->DenseRange(6, 14, 2);

void BM_CanonicalForm(benchmark::State& state) {
  const auto a = sample(ClassId::SYM, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(a));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 10, 2);

void BM_Hat(benchmark::State& state) {
  const auto a = sample(ClassId::C, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hat(a));
}
BENCHMARK(BM_Hat)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
