#pragma once

#include <string>
#include <vector>

#include "wmsn/pipeline.hpp"

namespace wmsn {

/// Floating-point field formatting used by every CSV: 9 significant digits,
/// '.' decimal separator.
std::string format_g9(double v);

/**
 * Write one run's artifacts into dir (created if missing):
 *   report.csv                        phase metrics, one row per phase
 *   deployment_{initial,tilted,final}.csv   id,x,y,z,theta_rad,gamma_rad
 *   coverage_{initial,tilted,final}.pgm     binary P5, 255 = covered, row 0 = y = 0
 *   manifest.txt                      config echo, versions, seed, timings
 * Files are written atomically (temp file + rename). Wall times appear only in
 * the manifest so the CSVs and PGMs are byte-reproducible.
 */
void write_run_artifacts(const ExperimentConfig& config, const RunResult& result,
                         const std::string& dir);

/// nodes,seed,initial_eta,tilted_eta,final_eta,m_prime,m_analytic_ceil,tilt_regressed
void write_sweep_csv(const std::vector<RunReport>& reports, const std::string& path);

}  // namespace wmsn
