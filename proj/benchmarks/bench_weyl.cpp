#include <benchmark/benchmark.h>

#include "moyal/winf.hpp"

using namespace moyal;

static void BM_WeylMultiply(benchmark::State& state) {
    const auto reg = ParameterRegistry::standard();
    const auto sig = weyl_signature(reg);
    const OrderParameter s = OrderParameter::formal(reg, "s");
    const std::uint32_t n = std::uint32_t(state.range());
    const CanonicalElement a = ordered_product(n, n, s, sig);
    for (auto _ : state) {
        auto product = multiply(a, a);
        benchmark::DoNotOptimize(product);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(BM_WeylMultiply)->DenseRange(1, 6)->Complexity();

static void BM_NormalOrderRewrite(benchmark::State& state) {
    const auto reg = ParameterRegistry::standard();
    const auto sig = weyl_signature(reg);
    const std::uint32_t n = std::uint32_t(state.range());
    const CanonicalElement a =
        CanonicalElement::monomial(sig, ExponentVec{0, n}, Coefficient::one(reg));
    const CanonicalElement b =
        CanonicalElement::monomial(sig, ExponentVec{n, 0}, Coefficient::one(reg));
    for (auto _ : state) {
        auto product = multiply_rewrite(a, b);
        benchmark::DoNotOptimize(product);
    }
}
BENCHMARK(BM_NormalOrderRewrite)->DenseRange(1, 6);

static void BM_HTower(benchmark::State& state) {
    const auto reg = ParameterRegistry::standard();
    const auto sig = weyl_signature(reg);
    for (auto _ : state) {
        auto h = h_tower(std::uint32_t(state.range()), sig);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HTower)->DenseRange(2, 8)->RangeMultiplier(2);
