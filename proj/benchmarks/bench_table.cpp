#include <benchmark/benchmark.h>

#include "moyal/structure_table.hpp"

using namespace moyal;

static void BM_StructureTable(benchmark::State& state) {
    const auto reg = ParameterRegistry::standard();
    const OrderParameter s = OrderParameter::formal(reg, "s");
    const std::uint32_t nmax = std::uint32_t(state.range(0));
    const unsigned jobs = unsigned(state.range(1));
    for (auto _ : state) {
        auto table = build_structure_table(nmax, s, false, jobs);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_StructureTable)
    ->Args({2, 1})
    ->Args({4, 1})
    ->Args({6, 1})
    ->Args({6, 4})
    ->Args({6, 8});

BENCHMARK_MAIN();
