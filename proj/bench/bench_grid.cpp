// Serial reference vs OpenMP grid measurement on a nonlinear center.

#include <benchmark/benchmark.h>

#include <tanperiod/field.hpp>
#include <tanperiod/oracle.hpp>

using namespace tanperiod;

namespace
{

const PiecewiseField &field()
{
    static const PiecewiseField f = load_field_file(TANPERIOD_BENCH_DATA_DIR "/cubic_center.json");
    return f;
}

SimulationConfig config(int points)
{
    SimulationConfig cfg;
    cfg.abs_tol = 1e-16L;
    cfg.rel_tol = 1e-16L;
    cfg.event_tol = 1e-18L;
    cfg.x_grid = SimulationConfig::log_grid(1e-3L, 1e-1L, points);
    return cfg;
}

void BM_GridSerial(benchmark::State &state)
{
    const SimulationConfig cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_grid_serial(field(), cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GridParallel(benchmark::State &state)
{
    const SimulationConfig cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_grid(field(), cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_GridSerial)->Arg(12)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Arg(12)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
