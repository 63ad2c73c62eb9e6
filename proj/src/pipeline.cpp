#include "wmsn/pipeline.hpp"

#include <chrono>
#include <numeric>

#include "wmsn/artifacts.hpp"
#include "wmsn/rng.hpp"
#include "wmsn/tilt.hpp"

namespace wmsn {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Disjoint-area node-count estimate (analytic_min_nodes) fed with the mean
// in-region sensed area of the post-tilt network. eta is clamped away from 1
// so fully covered runs still report a finite value.
double analytic_estimate(const std::vector<CellSet>& family, const Region& region,
                         double eta) {
    if (family.empty()) return 0.0;
    std::size_t cells = 0;
    for (const CellSet& s : family) cells += s.size();
    const double s_mean =
        static_cast<double>(cells) / family.size() * region.cell_size * region.cell_size;
    const double g = region.width * region.height;
    if (!(s_mean > 0.0) || !(s_mean < g) || !(eta > 0.0)) return 0.0;
    return analytic_min_nodes(std::min(eta, 1.0 - 1e-12), s_mean, g);
}

}  // namespace

std::vector<SensorPose> deploy_random(const ExperimentConfig& config) {
    config.validate();
    const ModelParams params = config.params();
    SplitMix64 rng(config.seed);
    std::vector<SensorPose> poses;
    poses.reserve(config.nodes);
    for (std::size_t i = 0; i < config.nodes; ++i) {
        SensorPose p;
        p.x = rng.uniform(0.0, config.width);
        p.y = rng.uniform(0.0, config.height);
        p.z = rng.uniform(config.z_min, config.z_max);
        p.theta = rng.uniform(0.0, kTwoPi);
        p.gamma = rng.uniform(params.beta, params.k_max);
        poses.push_back(p);
    }
    return poses;
}

RunResult run_pipeline(const ExperimentConfig& config) {
    config.validate();
    const ModelParams params = config.params();
    const Region region = config.region();

    RunResult res;
    RunReport& rep = res.report;
    rep.nodes = config.nodes;
    rep.seed = config.seed;

    auto t0 = Clock::now();
    res.initial_poses = deploy_random(config);
    rep.ms_deploy = ms_since(t0);

    t0 = Clock::now();
    std::vector<CellSet> family = rasterize_all(res.initial_poses, params, region, config.mode);
    res.state = CoverageState(region, config.nodes);
    for (NodeId i = 0; i < config.nodes; ++i) res.state.set_node(i, std::move(family[i]));
    rep.ms_raster = ms_since(t0);
    rep.initial = {res.state.coverage_ratio(), res.state.covered_count()};
    res.covered_initial = res.state.covered_bitmap();

    t0 = Clock::now();
    res.tilted_poses = optimize_all(res.initial_poses, params, region);
    // Re-rasterize only the nodes whose tilt actually changed.
    std::vector<NodeId> changed;
    for (NodeId i = 0; i < config.nodes; ++i)
        if (res.tilted_poses[i].gamma != res.initial_poses[i].gamma) changed.push_back(i);
    std::vector<CellSet> updated(changed.size());
    const int n_changed = static_cast<int>(changed.size());
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n_changed; ++j)
        updated[j] = covered_cells_serial(res.tilted_poses[changed[j]], params, region,
                                          config.mode);
    for (int j = 0; j < n_changed; ++j)
        res.state.set_node(changed[j], std::move(updated[j]));
    rep.ms_tilt = ms_since(t0);
    rep.tilted = {res.state.coverage_ratio(), res.state.covered_count()};
    rep.tilt_regressed = rep.tilted.eta < rep.initial.eta;
    res.covered_tilted = res.state.covered_bitmap();

    t0 = Clock::now();
    rep.target_eta = config.target_eta.value_or(rep.tilted.eta);
    CellSet universe(region.cell_count());
    std::iota(universe.begin(), universe.end(), 0u);
    res.solution = greedy_set_cover(res.state.family(), universe, rep.target_eta);
    rep.m_prime = res.solution.m_prime;
    rep.redundant_count = res.solution.redundant.size();
    rep.m_analytic = analytic_estimate(res.state.family(), region, rep.target_eta);
    rep.m_analytic_ceil = static_cast<std::size_t>(std::ceil(rep.m_analytic));
    rep.ms_cover = ms_since(t0);

    t0 = Clock::now();
    res.final_poses = res.tilted_poses;
    res.plan = relocate_all(res.solution, res.final_poses, params, region, config.mode,
                            res.state);
    rep.ms_relocate = ms_since(t0);
    rep.moves_accepted = res.plan.moves.size();
    rep.moves_rejected = res.plan.rejected;
    rep.final_phase = {res.state.coverage_ratio(), res.state.covered_count()};
    res.covered_final = res.state.covered_bitmap();

    return res;
}

std::vector<RunReport> run_sweep(const ExperimentConfig& base,
                                 const std::vector<std::size_t>& node_counts,
                                 const std::vector<std::uint64_t>& seeds,
                                 const std::string& out_dir) {
    std::vector<RunReport> reports;
    for (std::size_t n : node_counts) {
        for (std::uint64_t seed : seeds) {
            ExperimentConfig cfg = base;
            cfg.nodes = n;
            cfg.seed = seed;
            RunResult res = run_pipeline(cfg);
            if (!out_dir.empty()) {
                const std::string dir =
                    out_dir + "/n" + std::to_string(n) + "_seed" + std::to_string(seed);
                cfg.out_dir = dir;
                write_run_artifacts(cfg, res, dir);
            }
            reports.push_back(res.report);
        }
    }
    if (!out_dir.empty()) write_sweep_csv(reports, out_dir + "/sweep.csv");
    return reports;
}

}  // namespace wmsn
