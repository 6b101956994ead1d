// Serial reference kernels against their OpenMP counterparts.

#include <mimlab/generators.hpp>
#include <mimlab/matching.hpp>
#include <mimlab/width.hpp>

#include <benchmark/benchmark.h>

using namespace mimlab;

namespace
{
    auto exec_of(const benchmark::State & state) -> Execution
    {
        return state.range(1) ? Execution::parallel : Execution::serial;
    }

    auto label(benchmark::State & state) -> void
    {
        state.SetLabel(state.range(1) ? "parallel" : "serial");
    }

    void cut_table(benchmark::State & state)
    {
        auto g = random_cubic(static_cast<int>(state.range(0)), 1);
        for (auto _ : state)
            benchmark::DoNotOptimize(cut_value_table(g, exec_of(state)));
        label(state);
    }

    void exact_width(benchmark::State & state)
    {
        auto g = random_bipartite(static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0) + 1) / 2, 0.5, 3).graph();
        for (auto _ : state)
            benchmark::DoNotOptimize(mimw_exact(g, 9, exec_of(state)).value);
        label(state);
    }

    void treewidth(benchmark::State & state)
    {
        auto g = grid(2, static_cast<int>(state.range(0)) / 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(treewidth_exact(g, 26, exec_of(state)).value);
        label(state);
    }
}

BENCHMARK(cut_table)->ArgsProduct({{12, 14, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(exact_width)->ArgsProduct({{7, 8, 9}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(treewidth)->ArgsProduct({{14, 18, 22}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
