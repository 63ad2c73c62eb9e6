#pragma once

#include <cstdint>
#include <vector>

#include "wmsn/config.hpp"
#include "wmsn/cover.hpp"
#include "wmsn/relocate.hpp"

namespace wmsn {

struct PhaseMetrics {
    double eta = 0.0;
    std::size_t covered = 0;
};

struct RunReport {
    std::size_t nodes = 0;
    std::uint64_t seed = 0;
    PhaseMetrics initial, tilted, final_phase;
    double target_eta = 0.0;        ///< the eta' the cover phase worked toward
    std::size_t m_prime = 0;
    std::size_t redundant_count = 0;
    double m_analytic = 0.0;        ///< disjoint-area node-count estimate for target_eta
    std::size_t m_analytic_ceil = 0;
    std::size_t moves_accepted = 0;
    std::size_t moves_rejected = 0;
    bool tilt_regressed = false;    ///< post-tilt eta fell below the initial eta
    double ms_deploy = 0.0, ms_raster = 0.0, ms_tilt = 0.0, ms_cover = 0.0,
           ms_relocate = 0.0;
};

struct RunResult {
    RunReport report;
    std::vector<SensorPose> initial_poses, tilted_poses, final_poses;
    std::vector<std::uint8_t> covered_initial, covered_tilted, covered_final;
    CoverSolution solution;
    RelocationPlan plan;
    CoverageState state;  ///< final coverage state (after relocation)
};

/**
 * Seeded random deployment: per node draws x, y, z, theta, gamma in that
 * order from a SplitMix64 stream, uniform over [0,width] x [0,height] x
 * [z_min,z_max] x [0,2pi) x [beta,k_max]. Identical seed, identical poses.
 */
std::vector<SensorPose> deploy_random(const ExperimentConfig& config);

/// deploy -> rasterize -> tilt -> cover -> relocate, with per-phase metrics.
RunResult run_pipeline(const ExperimentConfig& config);

/**
 * run_pipeline per (node count, seed) pair; when out_dir is non-empty, writes
 * each run's artifacts under out_dir/n<b>_seed<s>/ plus a summary sweep.csv.
 */
std::vector<RunReport> run_sweep(const ExperimentConfig& base,
                                 const std::vector<std::size_t>& node_counts,
                                 const std::vector<std::uint64_t>& seeds,
                                 const std::string& out_dir);

}  // namespace wmsn
