#include <benchmark/benchmark.h>

#include <random>

#include "gzcz/ccc.hpp"
#include "gzcz/correlation.hpp"
#include "gzcz/search.hpp"
#include "gzcz/seeds.hpp"
#include "gzcz/zcz.hpp"

namespace {

gzcz::PhaseSequence random_sequence(std::mt19937& rng, std::uint32_t q, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) {
        x = dist(rng);
    }
    return {q, std::move(e)};
}

void BM_AccfExactBinary(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_sequence(rng, 2, n);
    const auto b = random_sequence(rng, 2, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::accf(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AccfExactBinary)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_AccfFloatPath(benchmark::State& state) {
    std::mt19937 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_sequence(rng, 8, n);
    const auto b = random_sequence(rng, 8, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::accf(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AccfFloatPath)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_PccfExactQuadriphase(benchmark::State& state) {
    std::mt19937 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_sequence(rng, 4, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::pccf(a, a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PccfExactQuadriphase)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_VerifyCccSeed(benchmark::State& state) {
    const auto code = gzcz::seed_registry("table3-N13");
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::verify_ccc(code));
    }
}
BENCHMARK(BM_VerifyCccSeed);

void BM_VerifyCccComposed60(benchmark::State& state) {
    const auto code = gzcz::kronecker_ccc(gzcz::seed_registry("table3-N3"),
                                          gzcz::seed_registry("table3-N5"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::verify_ccc(code));
    }
}
BENCHMARK(BM_VerifyCccComposed60);

void BM_BuildZczSet(benchmark::State& state) {
    const auto code = gzcz::seed_registry("example3-N4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::build_zcz_set(code));
    }
}
BENCHMARK(BM_BuildZczSet);

void BM_VerifyGolayZcz64(benchmark::State& state) {
    const auto set = gzcz::build_zcz_set(gzcz::seed_registry("example3-N4"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::verify_golay_zcz(set, 12));
    }
}
BENCHMARK(BM_VerifyGolayZcz64);

void BM_SearchFirstN3(benchmark::State& state) {
    gzcz::SearchConfig config;
    config.length = 3;
    config.max_solutions = 1;
    config.timeout_seconds = 60.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gzcz::search_ccc(config));
    }
}
BENCHMARK(BM_SearchFirstN3);

} // namespace

BENCHMARK_MAIN();
