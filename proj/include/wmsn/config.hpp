#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wmsn/grid.hpp"

namespace wmsn {

/**
 * One experiment's full configuration. Angles are degrees here and converted
 * to radians at params(); everything downstream works in radians.
 *
 * Defaults read the reference optics (45deg/60deg fields of view) as full
 * angles, giving half-angles alpha = 22.5, beta = 30, with K = 50.
 * literal_angles instead takes 45/60 as the half-angles themselves; that
 * combination cannot satisfy the sensing-model constraints (beta > K and
 * K + beta >= 90deg) and is rejected by validate() with a clear message.
 */
struct ExperimentConfig {
    std::size_t nodes = 100;
    double width = 500.0;
    double height = 500.0;
    double cell_size = 1.0;
    double alpha_deg = 22.5;
    double beta_deg = 30.0;
    double kmax_deg = 50.0;
    double z_min = 5.0;
    double z_max = 13.0;
    std::uint64_t seed = 1;
    std::optional<double> target_eta;  ///< empty: use the post-tilt coverage
    PredicateMode mode = PredicateMode::Quad;
    bool literal_angles = false;
    std::string out_dir;

    ModelParams params() const {
        if (literal_angles) return {deg_to_rad(45.0), deg_to_rad(60.0), deg_to_rad(kmax_deg)};
        return {deg_to_rad(alpha_deg), deg_to_rad(beta_deg), deg_to_rad(kmax_deg)};
    }
    Region region() const { return {width, height, cell_size}; }

    /// Throws DomainError on any inconsistency (params, region, z range, target).
    void validate() const;
};

std::string to_string(PredicateMode mode);
PredicateMode predicate_mode_from_string(const std::string& s);

/// key=value pairs in file order; '#' comments and blank lines skipped.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;
ConfigEntries read_flat_config(const std::string& path);

/**
 * Apply one config-file entry to the shared scalar settings (width, height,
 * cell-size, alpha-deg, beta-deg, kmax-deg, zmin, zmax, seed, target-eta,
 * predicate, literal-table1, out). Returns false for keys the caller owns
 * (nodes and seeds lists); throws DomainError on unknown keys or bad values.
 */
bool apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

double parse_double(const std::string& key, const std::string& value);
std::uint64_t parse_u64(const std::string& key, const std::string& value);

}  // namespace wmsn
