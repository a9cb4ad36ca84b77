#include "hopfrg/birkhoff.hpp"
#include "hopfrg/random.hpp"
#include "hopfrg/renorm.hpp"

#include <benchmark/benchmark.h>

using namespace hopfrg;

namespace {

void bm_enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_forests(n));
}
BENCHMARK(bm_enumerate)->Arg(5)->Arg(6)->Arg(7);

void bm_coproduct(benchmark::State& state) {
    const auto forests = enumerate_forests(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh memo-free cost is what we care about, so hit every forest
        for (const Forest& f : forests) benchmark::DoNotOptimize(subforests(f));
    }
}
BENCHMARK(bm_coproduct)->Arg(5)->Arg(6);

void bm_antipode(benchmark::State& state) {
    const auto forests = enumerate_forests(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const Forest& f : forests) benchmark::DoNotOptimize(antipode(Alg::H, f));
}
BENCHMARK(bm_antipode)->Arg(5)->Arg(6);

void bm_birkhoff(benchmark::State& state) {
    Rng rng(42);
    const Character phi = random_character(rng, Alg::H, 4);
    const auto forests = enumerate_forests(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const BirkhoffPair bp = birkhoff(phi); // fresh memo each round
        for (const Forest& f : forests) benchmark::DoNotOptimize(bp.minus(f));
    }
}
BENCHMARK(bm_birkhoff)->Arg(3)->Arg(4);

void bm_rg_flow(benchmark::State& state) {
    Rng rng(42);
    const Character phi = random_character(rng, Alg::H, 3, /*a_plus=*/true);
    const InfChar alpha = random_infchar(rng, Alg::K, 2, /*a_plus=*/true, /*constant=*/true);
    const auto forests = enumerate_forests(3);
    for (auto _ : state) {
        const FlowCharacter f = rg_flow(phi, alpha);
        for (const Forest& x : forests) benchmark::DoNotOptimize(f.character(x));
    }
}
BENCHMARK(bm_rg_flow);

} // namespace

BENCHMARK_MAIN();
