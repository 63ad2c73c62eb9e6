#include "wmsn/config.hpp"

#include <fstream>

namespace wmsn {

void ExperimentConfig::validate() const {
    params().validate();
    region().validate();
    if (!(z_min > 0.0)) throw DomainError("z_min must be positive");
    if (!(z_min <= z_max)) throw DomainError("z_min must not exceed z_max");
    if (target_eta && !(*target_eta >= 0.0 && *target_eta <= 1.0))
        throw DomainError("target_eta must lie in [0, 1]");
}

std::string to_string(PredicateMode mode) {
    return mode == PredicateMode::Quad ? "quad" : "annular";
}

PredicateMode predicate_mode_from_string(const std::string& s) {
    if (s == "quad") return PredicateMode::Quad;
    if (s == "annular") return PredicateMode::Annular;
    throw DomainError("unknown predicate mode '" + s + "' (expected quad or annular)");
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size())
        throw DomainError("config key '" + key + "': expected a number, got '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size())
        throw DomainError("config key '" + key + "': expected an unsigned integer, got '" +
                          value + "'");
    return v;
}

ConfigEntries read_flat_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    ConfigEntries entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw DomainError("config file '" + path + "' line " + std::to_string(lineno) +
                              ": expected key=value");
        entries.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return entries;
}

bool apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "width") cfg.width = parse_double(key, value);
    else if (key == "height") cfg.height = parse_double(key, value);
    else if (key == "cell-size") cfg.cell_size = parse_double(key, value);
    else if (key == "alpha-deg") cfg.alpha_deg = parse_double(key, value);
    else if (key == "beta-deg") cfg.beta_deg = parse_double(key, value);
    else if (key == "kmax-deg") cfg.kmax_deg = parse_double(key, value);
    else if (key == "zmin") cfg.z_min = parse_double(key, value);
    else if (key == "zmax") cfg.z_max = parse_double(key, value);
    else if (key == "seed") cfg.seed = parse_u64(key, value);
    else if (key == "target-eta") cfg.target_eta = parse_double(key, value);
    else if (key == "predicate") cfg.mode = predicate_mode_from_string(value);
    else if (key == "literal-table1") cfg.literal_angles = parse_u64(key, value) != 0;
    else if (key == "out") cfg.out_dir = value;
    else if (key == "nodes" || key == "seeds") return false;  // caller-owned lists
    else throw DomainError("unknown config key '" + key + "'");
    return true;
}

}  // namespace wmsn
