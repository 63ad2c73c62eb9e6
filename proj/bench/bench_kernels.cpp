// Parallel kernels vs their serial references on pipeline-scale inputs.

#include <benchmark/benchmark.h>

#include <numeric>

#include "wmsn/cover.hpp"
#include "wmsn/pipeline.hpp"
#include "wmsn/relocate.hpp"
#include "wmsn/tilt.hpp"

using namespace wmsn;

namespace {

ExperimentConfig base_config(std::size_t nodes) {
    ExperimentConfig cfg;
    cfg.nodes = nodes;
    cfg.seed = 7;
    return cfg;
}

struct Fixture {
    ExperimentConfig cfg = base_config(100);
    ModelParams params = cfg.params();
    Region region = cfg.region();
    std::vector<SensorPose> poses = optimize_all_serial(deploy_random(cfg), params, region);
    std::vector<CellSet> family = rasterize_all_serial(poses, params, region, cfg.mode);
    CellSet universe;
    CellSet uncovered;
    double disc_radius = 25.0;

    Fixture() {
        universe.resize(region.cell_count());
        std::iota(universe.begin(), universe.end(), 0u);
        CoverageState state(region, poses.size());
        for (NodeId i = 0; i < poses.size(); ++i) state.set_node(i, family[i]);
        uncovered = state.uncovered();
    }
};

const Fixture& fixture() {
    static Fixture f;
    return f;
}

void BM_RasterizeAll(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(rasterize_all(f.poses, f.params, f.region, f.cfg.mode));
}

void BM_RasterizeAllSerial(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(rasterize_all_serial(f.poses, f.params, f.region, f.cfg.mode));
}

void BM_OptimizeAll(benchmark::State& state) {
    const Fixture& f = fixture();
    std::vector<SensorPose> many;
    for (int i = 0; i < 1000; ++i) many.insert(many.end(), f.poses.begin(), f.poses.end());
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_all(many, f.params, f.region));
}

void BM_OptimizeAllSerial(benchmark::State& state) {
    const Fixture& f = fixture();
    std::vector<SensorPose> many;
    for (int i = 0; i < 1000; ++i) many.insert(many.end(), f.poses.begin(), f.poses.end());
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_all_serial(many, f.params, f.region));
}

void BM_GreedyCover(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_set_cover(f.family, f.universe, 0.99));
}

void BM_GreedyCoverSerial(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_set_cover_serial(f.family, f.universe, 0.99));
}

void BM_BestTargetCell(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(best_target_cell(f.uncovered, f.disc_radius, f.region));
}

void BM_BestTargetCellSerial(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(best_target_cell_serial(f.uncovered, f.disc_radius, f.region));
}

}  // namespace

BENCHMARK(BM_RasterizeAll)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RasterizeAllSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeAll)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeAllSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyCover)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyCoverSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BestTargetCell)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BestTargetCellSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
