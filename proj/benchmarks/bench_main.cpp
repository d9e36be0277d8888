#include <benchmark/benchmark.h>

#include "wschatten/wschatten.hpp"

using namespace wschatten;

static void BM_SingularValuesGinibre(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = random_ginibre(n, RandomSeed{1});
    for (auto _ : state) benchmark::DoNotOptimize(singular_values(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SingularValuesGinibre)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

static void BM_RandomUnitary(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(random_unitary(n, RandomSeed{seed++}));
}
BENCHMARK(BM_RandomUnitary)->Arg(16)->Arg(64);

static void BM_WeakNorm(benchmark::State& state) {
    const SingularSpectrum s = power_diagonal(static_cast<std::size_t>(state.range(0)), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(weak_norm(s, 1.5));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeakNorm)->Range(1 << 10, 1 << 20);

static void BM_SortedProducts(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SingularSpectrum t = power_diagonal(n, 2.0);
    const PairingExtremizer ext = anti_chain_pairing(n, make_exponents(2, 2), default_k0(n));
    for (auto _ : state) benchmark::DoNotOptimize(sorted_products(t, t, ext.pairing));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortedProducts)->Range(1 << 10, 1 << 20);

static void BM_HornCheck(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix t = random_ginibre(n, RandomSeed{2});
    const ComplexMatrix s = random_ginibre(n, RandomSeed{3});
    const ProductSpectra sp = product_spectra(t, s);
    for (auto _ : state) benchmark::DoNotOptimize(horn_check(sp.ts, sp.t, sp.s));
}
BENCHMARK(BM_HornCheck)->Arg(16)->Arg(64)->Arg(256);

static void BM_PairingBestSweep(benchmark::State& state) {
    const std::size_t sizes[] = {static_cast<std::size_t>(state.range(0))};
    const Family fam[] = {Family::pairing_best};
    const HolderExponents e = make_exponents(2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(saturation_sweep(e, sizes, fam));
}
BENCHMARK(BM_PairingBestSweep)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
