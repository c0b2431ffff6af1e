#include "sheafreg/bott.hpp"
#include "sheafreg/catalog.hpp"
#include "sheafreg/les.hpp"
#include "sheafreg/quadric.hpp"
#include "sheafreg/regularity.hpp"

#include <benchmark/benchmark.h>

using namespace sheafreg;

namespace {

void BM_BottGrid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int acc = 0;
        for (int p = 0; p <= n; ++p)
            for (int k = -12; k <= 12; ++k)
                for (int q = 0; q <= n; ++q)
                    acc += coh_omega(n, p, k, q);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BottGrid)->Arg(3)->Arg(5);

void BM_KoszulRegularity(benchmark::State& state) {
    const int e = static_cast<int>(state.range(0));
    std::vector<int> degrees(static_cast<size_t>(e), 4);
    for (auto _ : state) {
        int reg = regularity_of_table(koszul(6, degrees));
        benchmark::DoNotOptimize(reg);
    }
}
BENCHMARK(BM_KoszulRegularity)->Arg(2)->Arg(4)->Arg(6);

void BM_ScrollTable(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // fresh table each iteration: the cost is the solver, not the memo
        CohTable table = cohomology_table(VarietySpec::palatini(t));
        Int acc = 0;
        for (int k = -5; k <= 4 * t + 12; ++k)
            acc += table.value(1, k).lo;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ScrollTable)->Arg(0)->Arg(3);

void BM_ScrollRegularityScan(benchmark::State& state) {
    for (auto _ : state) {
        RegScanResult scan = regularity_scan(cohomology_table(VarietySpec::palatini(0)), 3);
        benchmark::DoNotOptimize(scan.reg);
    }
}
BENCHMARK(BM_ScrollRegularityScan);

void BM_QuadricSeries(benchmark::State& state) {
    QuadricDivisorSpec spec = QuadricDivisorSpec::rank4(4, 6, 5);
    for (auto _ : state) {
        Int acc = 0;
        for (int k = -10; k <= 16; ++k)
            acc += series_coh(spec, 0, k);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_QuadricSeries);

void BM_SheafTableFromResolution(benchmark::State& state) {
    BettiTable t = koszul(6, {2, 3, 4});
    for (auto _ : state) {
        CohTable table = sheaf_table_from_betti(t);
        Int acc = table.value(0, 9).lo;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_SheafTableFromResolution);

} // namespace

BENCHMARK_MAIN();
