#include <benchmark/benchmark.h>

#include "fdsat/duplexing.hpp"
#include "fdsat/geometry.hpp"
#include "fdsat/scenario.hpp"
#include "fdsat/usecases.hpp"

namespace {

using namespace fdsat;

geometry::ConstellationSpec shell() {
    geometry::ConstellationSpec spec;
    spec.altitude_km = 780.0;
    spec.planes = 6;
    spec.sats_per_plane = 11;
    spec.phase_offset_deg = geometry::default_phase_offset_deg(6, 11);
    return spec;
}

void BM_Propagate66(benchmark::State& state) {
    const auto spec = shell();
    double t = 0.0;
    for (auto _ : state) {
        t += 10.0;
        benchmark::DoNotOptimize(geometry::propagate(spec, t));
    }
}
BENCHMARK(BM_Propagate66);

void BM_ElevationAndRange(benchmark::State& state) {
    const geometry::GeodeticPosition observer{49.6266, 6.15898, 0.0};
    const auto states = geometry::propagate(shell(), 1320.0);
    std::size_t i = 0;
    for (auto _ : state) {
        i = (i + 1) % states.size();
        benchmark::DoNotOptimize(geometry::elevation_and_range(observer, states[i].position));
    }
}
BENCHMARK(BM_ElevationAndRange);

void BM_BestPass6h(benchmark::State& state) {
    const auto spec = shell();
    const std::vector<geometry::GeodeticPosition> observers{{49.6266, 6.15898, 0.0},
                                                            {42.16951, -8.68318, 0.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(geometry::best_pass(spec, observers, 21600.0, 10.0, 10.0));
    }
}
BENCHMARK(BM_BestPass6h);

void BM_AssessFuUd(benchmark::State& state) {
    const auto tmpl = usecases::default_scenario(usecases::UseCaseId::FU_UD);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scenario::assess(tmpl.scenario));
    }
}
BENCHMARK(BM_AssessFuUd);

void BM_Sweep200(benchmark::State& state) {
    const auto tmpl = usecases::default_scenario(usecases::UseCaseId::FU_UD);
    std::vector<double> grid;
    for (int k = 0; k < 200; ++k) grid.push_back(0.5 * k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scenario::sweep_sic(tmpl.scenario, grid));
    }
}
BENCHMARK(BM_Sweep200);

}  // namespace

BENCHMARK_MAIN();
