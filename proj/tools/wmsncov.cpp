// wmsncov: coverage optimization for camera sensor networks on a ground grid:
// tilt-angle tuning, greedy working-set selection and redundant-node
// relocation, with deterministic seeded deployments.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wmsn/artifacts.hpp"
#include "wmsn/pipeline.hpp"

namespace {

struct CliOptions {
    wmsn::ExperimentConfig cfg;
    std::string predicate = "quad";
    double target_eta = -1.0;  // < 0: post-tilt target
    std::string config_path;
    std::vector<std::size_t> node_list{100};
    std::vector<std::uint64_t> seed_list{1};
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--width", opt.cfg.width, "Region width in length units");
    cmd->add_option("--height", opt.cfg.height, "Region height in length units");
    cmd->add_option("--cell-size", opt.cfg.cell_size, "Grid cell edge length");
    cmd->add_option("--alpha-deg", opt.cfg.alpha_deg, "Horizontal half-FOV, degrees");
    cmd->add_option("--beta-deg", opt.cfg.beta_deg, "Vertical half-FOV, degrees");
    cmd->add_option("--kmax-deg", opt.cfg.kmax_deg, "Maximum tilt angle, degrees");
    cmd->add_option("--zmin", opt.cfg.z_min, "Minimum mount height");
    cmd->add_option("--zmax", opt.cfg.z_max, "Maximum mount height");
    cmd->add_option("--target-eta", opt.target_eta,
                    "Coverage target for the working-set selection (default: the "
                    "post-tilt coverage)");
    cmd->add_option("--predicate", opt.predicate, "Point-coverage predicate: quad|annular")
        ->check(CLI::IsMember({"quad", "annular"}));
    cmd->add_flag("--literal-table1", opt.cfg.literal_angles,
                  "Use the literal reference angle table (alpha=45, beta=60 as "
                  "half-angles); rejected by validation");
    cmd->add_option("--out", opt.cfg.out_dir, "Output directory");
    cmd->add_option("--config", opt.config_path,
                    "Flat key=value config file; command-line flags override it");
}

// The config file must be loaded into the bound values before CLI11 parses the
// command line, so flags given on the command line override file entries.
std::string prescan_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return argv[i + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return {};
}

std::vector<std::uint64_t> parse_u64_list(const std::string& key, const std::string& value) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        const std::size_t comma = value.find(',', pos);
        const std::string item =
            value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(wmsn::parse_u64(key, item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void load_config_file(const std::string& path, CliOptions& opt, bool list_nodes) {
    for (const auto& [key, value] : wmsn::read_flat_config(path)) {
        if (wmsn::apply_config_entry(opt.cfg, key, value)) continue;
        if (key == "nodes") {
            const auto values = parse_u64_list(key, value);
            if (!list_nodes && values.size() != 1)
                throw wmsn::DomainError("config key 'nodes': run takes a single value");
            opt.node_list.assign(values.begin(), values.end());
            opt.cfg.nodes = static_cast<std::size_t>(values.front());
        } else if (key == "seeds") {
            opt.seed_list = parse_u64_list(key, value);
        }
    }
    if (opt.cfg.target_eta) opt.target_eta = *opt.cfg.target_eta;
    opt.predicate = wmsn::to_string(opt.cfg.mode);
}

void finalize(CliOptions& opt) {
    opt.cfg.mode = wmsn::predicate_mode_from_string(opt.predicate);
    if (opt.target_eta >= 0.0) opt.cfg.target_eta = opt.target_eta;
}

void print_report(const wmsn::RunReport& r) {
    std::printf("n=%zu seed=%llu\n", r.nodes, static_cast<unsigned long long>(r.seed));
    std::printf("  initial  eta=%-12s covered=%zu\n", wmsn::format_g9(r.initial.eta).c_str(),
                r.initial.covered);
    std::printf("  tilted   eta=%-12s covered=%zu%s\n", wmsn::format_g9(r.tilted.eta).c_str(),
                r.tilted.covered, r.tilt_regressed ? "  (below initial)" : "");
    std::printf("  final    eta=%-12s covered=%zu\n",
                wmsn::format_g9(r.final_phase.eta).c_str(), r.final_phase.covered);
    std::printf("  target eta'=%s  m'=%zu  ceil(m)=%zu  redundant=%zu  moves=%zu accepted / %zu rejected\n",
                wmsn::format_g9(r.target_eta).c_str(), r.m_prime, r.m_analytic_ceil,
                r.redundant_count, r.moves_accepted, r.moves_rejected);
    std::printf("  timing ms: deploy=%.1f raster=%.1f tilt=%.1f cover=%.1f relocate=%.1f\n",
                r.ms_deploy, r.ms_raster, r.ms_tilt, r.ms_cover, r.ms_relocate);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage optimization for camera sensor networks"};
    app.require_subcommand(1);

    CliOptions run_opt;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one seeded pipeline");
    run_cmd->add_option("--nodes", run_opt.cfg.nodes, "Number of sensor nodes");
    run_cmd->add_option("--seed", run_opt.cfg.seed, "Deployment seed (64-bit)");
    add_common_flags(run_cmd, run_opt);

    CliOptions sweep_opt;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Run a (nodes x seeds) grid of pipelines");
    sweep_cmd->add_option("--nodes", sweep_opt.node_list, "Node counts, comma separated")
        ->delimiter(',');
    sweep_cmd->add_option("--seeds", sweep_opt.seed_list, "Seeds, comma separated")
        ->delimiter(',');
    add_common_flags(sweep_cmd, sweep_opt);

    try {
        const std::string config_path = prescan_config_path(argc, argv);
        if (!config_path.empty()) {
            load_config_file(config_path, run_opt, /*list_nodes=*/false);
            load_config_file(config_path, sweep_opt, /*list_nodes=*/true);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            finalize(run_opt);
            run_opt.cfg.validate();
            wmsn::RunResult res = wmsn::run_pipeline(run_opt.cfg);
            if (!run_opt.cfg.out_dir.empty())
                wmsn::write_run_artifacts(run_opt.cfg, res, run_opt.cfg.out_dir);
            print_report(res.report);
        } else {
            finalize(sweep_opt);
            sweep_opt.cfg.validate();
            const auto reports = wmsn::run_sweep(sweep_opt.cfg, sweep_opt.node_list,
                                                 sweep_opt.seed_list, sweep_opt.cfg.out_dir);
            for (const auto& r : reports) print_report(r);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
