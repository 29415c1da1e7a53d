#include <benchmark/benchmark.h>

#include "cychom/cyclic_homology.hpp"
#include "cychom/hochschild.hpp"
#include "cychom/kassel.hpp"
#include "cychom/lambda.hpp"
#include "cychom/linalg.hpp"
#include "cychom/mixed.hpp"
#include "cychom/verify.hpp"

using namespace cychom;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec F2 = RingSpec::prime_field(2);

void BM_HomSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_set(n, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hom_set_size(n, n)));
}
BENCHMARK(BM_HomSet)->DenseRange(1, 4);

void BM_CyclicNerveMatrix2(benchmark::State& state) {
  const AlgebraPresentation a = matrix_algebra(F2, 2);
  const int top = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_nerve(a, top));
}
BENCHMARK(BM_CyclicNerveMatrix2)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MixedIdentities(benchmark::State& state) {
  const CyclicModule m = cyclic_nerve(upper_triangular_algebra(Z, 2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_mixed(mixed_complex(m)));
}
BENCHMARK(BM_MixedIdentities)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_SmithRepresentableHochschild(benchmark::State& state) {
  const CyclicModule m = representable_module(Z, static_cast<int>(state.range(0)), 6);
  const ChainComplex c = hochschild_chain_complex(m, false);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(c.d(4)));
}
BENCHMARK(BM_SmithRepresentableHochschild)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_HCDualNumbers(benchmark::State& state) {
  const CyclicModule m = cyclic_nerve(dual_numbers(Z), static_cast<int>(state.range(0)) + 2);
  for (auto _ : state) benchmark::DoNotOptimize(hc(m, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HCDualNumbers)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_HNGround(benchmark::State& state) {
  const CyclicModule m = constant_module(Z, 20);
  for (auto _ : state) benchmark::DoNotOptimize(hn(m, -4, 0));
}
BENCHMARK(BM_HNGround)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_resolution(m, 8, Z));
}
BENCHMARK(BM_Resolution)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_KasselIso(benchmark::State& state) {
  const CyclicModule m = representable_module(Z, 1, 6);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kassel_iso_check(m, depth));
}
BENCHMARK(BM_KasselIso)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
