// Serial reference vs tabulated sweeps (serial and OpenMP) for an 8-point beta grid.
#include <benchmark/benchmark.h>

#include "casimir/profile_table.hpp"
#include "casimir/reference.hpp"
#include "casimir/scenarios.hpp"

namespace {

using casimir::GearKind;

GearKind kind_of(const benchmark::State& state) {
    return state.range(0) == 0 ? GearKind::open_gear : GearKind::concentric;
}

void BM_Reference(benchmark::State& state) {
    const auto grid = casimir::uniform_beta_grid(8);
    for (auto _ : state) {
        double sum = 0.0;
        for (double beta : grid) {
            sum += casimir::reference::energy_torque(kind_of(state), beta, 3.0, 6, {}).torque;
        }
        benchmark::DoNotOptimize(sum);
    }
}

void table_sweep(benchmark::State& state, casimir::Execution exec) {
    const auto grid = casimir::uniform_beta_grid(8);
    for (auto _ : state) {
        const auto table = casimir::quad::build_profile_table(kind_of(state), 3.0, 7, {}, exec);
        double sum = 0.0;
        for (double beta : grid) {
            sum += casimir::quad::torque(table, beta, 6);
        }
        benchmark::DoNotOptimize(sum);
    }
}

void BM_TableSerial(benchmark::State& state) { table_sweep(state, casimir::Execution::serial); }
void BM_TableParallel(benchmark::State& state) { table_sweep(state, casimir::Execution::parallel); }

void BM_Sweep64(benchmark::State& state) {
    casimir::GearScenario s;
    s.kind = kind_of(state);
    s.y = 5.0;
    const auto grid = casimir::uniform_beta_grid(64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(casimir::sweep(s, grid).rows.back().torque);
    }
}

}  // namespace

// range(0): 0 = open gear, 1 = concentric
BENCHMARK(BM_Reference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Sweep64)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
