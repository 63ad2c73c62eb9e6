#include "wmsn/artifacts.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wmsn {

namespace fs = std::filesystem;

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

void write_atomic(const fs::path& path, const std::string& data) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
    }
    fs::rename(tmp, path);
}

std::string deployment_csv(const std::vector<SensorPose>& poses) {
    std::string out = "id,x,y,z,theta_rad,gamma_rad\n";
    for (std::size_t i = 0; i < poses.size(); ++i) {
        const SensorPose& p = poses[i];
        out += std::to_string(i) + ',' + format_g9(p.x) + ',' + format_g9(p.y) + ',' +
               format_g9(p.z) + ',' + format_g9(p.theta) + ',' + format_g9(p.gamma) + '\n';
    }
    return out;
}

std::string coverage_pgm(const std::vector<std::uint8_t>& bitmap, const Region& region) {
    std::string out =
        "P5\n" + std::to_string(region.cols()) + " " + std::to_string(region.rows()) + "\n255\n";
    out.reserve(out.size() + bitmap.size());
    for (std::uint8_t b : bitmap) out.push_back(b ? static_cast<char>(255) : '\0');
    return out;
}

std::string manifest_txt(const ExperimentConfig& cfg, const RunResult& res) {
    const RunReport& r = res.report;
    std::ostringstream out;
    out << "tool: wmsncov 1.0.0\n";
    out << "compiler: " << __VERSION__ << "\n";
    out << "seed: " << cfg.seed << "\n";
    out << "nodes: " << cfg.nodes << "\n";
    out << "width: " << format_g9(cfg.width) << "\n";
    out << "height: " << format_g9(cfg.height) << "\n";
    out << "cell-size: " << format_g9(cfg.cell_size) << "\n";
    out << "alpha-deg: " << format_g9(cfg.alpha_deg) << "\n";
    out << "beta-deg: " << format_g9(cfg.beta_deg) << "\n";
    out << "kmax-deg: " << format_g9(cfg.kmax_deg) << "\n";
    out << "zmin: " << format_g9(cfg.z_min) << "\n";
    out << "zmax: " << format_g9(cfg.z_max) << "\n";
    out << "predicate: " << to_string(cfg.mode) << "\n";
    out << "literal-table1: " << (cfg.literal_angles ? 1 : 0) << "\n";
    out << "target-eta: "
        << (cfg.target_eta ? format_g9(*cfg.target_eta) : std::string("post-tilt")) << "\n";
    out << "target-eta-used: " << format_g9(r.target_eta) << "\n";
    out << "out: " << cfg.out_dir << "\n";
    out << "timing-ms: deploy=" << format_g9(r.ms_deploy) << " raster=" << format_g9(r.ms_raster)
        << " tilt=" << format_g9(r.ms_tilt) << " cover=" << format_g9(r.ms_cover)
        << " relocate=" << format_g9(r.ms_relocate) << "\n";
    return out.str();
}

}  // namespace

void write_run_artifacts(const ExperimentConfig& config, const RunResult& result,
                         const std::string& dir) {
    fs::create_directories(dir);
    const fs::path base(dir);
    const Region region = config.region();
    const RunReport& r = result.report;
    const std::size_t total_cells = region.cell_count();

    std::string report =
        "phase,eta,covered_cells,total_cells,m_prime,m_analytic_ceil,redundant,"
        "moves_accepted,moves_rejected\n";
    report += "initial," + format_g9(r.initial.eta) + ',' + std::to_string(r.initial.covered) +
              ',' + std::to_string(total_cells) + ",,,,,\n";
    report += "tilted," + format_g9(r.tilted.eta) + ',' + std::to_string(r.tilted.covered) +
              ',' + std::to_string(total_cells) + ",,,,,\n";
    report += "final," + format_g9(r.final_phase.eta) + ',' +
              std::to_string(r.final_phase.covered) + ',' + std::to_string(total_cells) + ',' +
              std::to_string(r.m_prime) + ',' + std::to_string(r.m_analytic_ceil) + ',' +
              std::to_string(r.redundant_count) + ',' + std::to_string(r.moves_accepted) + ',' +
              std::to_string(r.moves_rejected) + '\n';
    write_atomic(base / "report.csv", report);

    write_atomic(base / "deployment_initial.csv", deployment_csv(result.initial_poses));
    write_atomic(base / "deployment_tilted.csv", deployment_csv(result.tilted_poses));
    write_atomic(base / "deployment_final.csv", deployment_csv(result.final_poses));

    write_atomic(base / "coverage_initial.pgm", coverage_pgm(result.covered_initial, region));
    write_atomic(base / "coverage_tilted.pgm", coverage_pgm(result.covered_tilted, region));
    write_atomic(base / "coverage_final.pgm", coverage_pgm(result.covered_final, region));

    write_atomic(base / "manifest.txt", manifest_txt(config, result));
}

void write_sweep_csv(const std::vector<RunReport>& reports, const std::string& path) {
    std::string out =
        "nodes,seed,initial_eta,tilted_eta,final_eta,m_prime,m_analytic_ceil,tilt_regressed\n";
    for (const RunReport& r : reports) {
        out += std::to_string(r.nodes) + ',' + std::to_string(r.seed) + ',' +
               format_g9(r.initial.eta) + ',' + format_g9(r.tilted.eta) + ',' +
               format_g9(r.final_phase.eta) + ',' + std::to_string(r.m_prime) + ',' +
               std::to_string(r.m_analytic_ceil) + ',' + (r.tilt_regressed ? "1" : "0") + '\n';
    }
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    const fs::path tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        f.write(out.data(), static_cast<std::streamsize>(out.size()));
    }
    fs::rename(tmp, p);
}

}  // namespace wmsn
