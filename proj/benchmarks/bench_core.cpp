#include <benchmark/benchmark.h>

#include "hecke0/coinvariant.hpp"
#include "hecke0/compat.hpp"
#include "hecke0/specht_module.hpp"
#include "hecke0/tabloid_module.hpp"

using namespace hecke0;

static void BM_GroebnerReduceTopDegree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GroebnerBasis g(n, MonomialOrder::lex);
    std::vector<int> alpha(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) alpha[static_cast<std::size_t>(j)] = n - 1 - j;
    const auto p = PolynomialVector::monomial(n, MonomialOrder::lex, make_exponent(alpha));
    for (auto _ : state) benchmark::DoNotOptimize(g.reduce(p));
}
BENCHMARK(BM_GroebnerReduceTopDegree)->DenseRange(3, 7);

static void BM_CoinvariantModule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(coinvariant_module(n));
}
BENCHMARK(BM_CoinvariantModule)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_SpechtGenerators(benchmark::State& state) {
    const Partition lam({3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(specht_generators(lam));
}
BENCHMARK(BM_SpechtGenerators)->Unit(benchmark::kMillisecond);

static void BM_TabloidCharacteristic(benchmark::State& state) {
    const Partition lam({3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(to_schur(qsym_char(tabloid_module(lam))));
}
BENCHMARK(BM_TabloidCharacteristic)->Unit(benchmark::kMillisecond);

static void BM_VerifyRelations(benchmark::State& state) {
    const auto m = coinvariant_module(6);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_hecke_relations(m, workers));
}
BENCHMARK(BM_VerifyRelations)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
