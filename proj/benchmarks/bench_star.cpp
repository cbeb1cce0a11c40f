#include <benchmark/benchmark.h>

#include "moyal/symbol.hpp"

using namespace moyal;

static void BM_StarMonomial(benchmark::State& state) {
    const auto reg = ParameterRegistry::standard();
    const OrderParameter s = OrderParameter::formal(reg, "s");
    const std::uint32_t n = std::uint32_t(state.range());
    const Symbol f = Symbol::power(reg, n, n);
    for (auto _ : state) {
        auto product = star(f, f, s);
        benchmark::DoNotOptimize(product);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(BM_StarMonomial)->DenseRange(1, 6)->Complexity();

static void BM_MoyalBracketNumericS(benchmark::State& state) {
    const auto reg = ParameterRegistry::standard();
    const OrderParameter s = OrderParameter::numeric(reg, GaussianRational(0));
    const std::uint32_t n = std::uint32_t(state.range());
    const Symbol f = Symbol::power(reg, n, 1);
    const Symbol g = Symbol::power(reg, 1, n);
    for (auto _ : state) {
        auto bracket = moyal_bracket(f, g, s);
        benchmark::DoNotOptimize(bracket);
    }
}
BENCHMARK(BM_MoyalBracketNumericS)->DenseRange(1, 8);
