#pragma once

// Scenario configuration: every physical, constraint, and algorithmic
// parameter of a simulation run, plus the root RNG seed. Loadable from a
// flat key-value text file (see README for the schema).

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavnet {

struct GaConfig {
    int pop_size = 50;            // chromosomes per generation
    double elite_frac = 0.40;     // fraction copied unchanged
    double mutation_rate = 0.09;  // multiplicative step size
    int genes_mutated = 4;        // distinct genes perturbed per chromosome
    int max_generations = 50;
    int stall_generations = 5;    // stop after this many unimproved generations
};

struct ScenarioConfig {
    // Deployment region and ground process
    double area_side = 4000.0;    // m; square region [0, side]^2
    double delta = 2e-6;          // TSBS intensity, 1/m^2
    double d_min = 250.0;         // hard-core separation, m
    int num_uavs = 4;
    double h_min = 300.0;         // m
    double h_max = 800.0;         // m

    // Air-to-ground channel
    double f_carrier = 2e9;       // Hz
    double alpha = 9.61;          // environment constant
    double beta = 0.16;           // environment constant
    double xi_los_db = 1.0;       // LoS excess loss, dB
    double xi_nlos_db = 20.0;     // NLoS excess loss, dB
    double gamma = 2.0;           // path-loss exponent
    double m_los = 4.0;           // Nakagami shape, LoS
    double m_nlos = 1.0;          // Nakagami shape, NLoS (Rayleigh)

    // Power, interference, and QoS limits
    double psi_min = 0.0;         // W
    double psi_max = 1.3;         // W
    double i_th = 1.1943e-14;     // interference threshold, W
    double noise_dbm = -125.0;    // noise power, dBm
    double sinr_min_db = -10.0;

    // Per-UAV and backhaul resource caps
    double bandwidth_cap = 200e6; // Hz per UAV
    int link_cap = 7;             // links per UAV
    double backhaul_cap = 1.66e9; // bit/s, network-wide

    // Demand model
    std::vector<double> demand_menu = {20e6, 40e6, 60e6, 80e6, 100e6}; // bit/s

    // Energy model
    double epsilon = 1.0 / 0.38;  // inverse power-amplifier efficiency
    double rho_c = 0.1;           // circuit power per active link, W

    // Baseline placement
    double baseline_height = 550.0; // m; altitude used by the k-means baseline

    GaConfig ga;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const {
        auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
        if (area_side <= 0.0) fail("area_side must be positive");
        if (delta < 0.0) fail("delta must be non-negative");
        if (d_min < 0.0) fail("d_min must be non-negative");
        if (num_uavs < 1) fail("num_uavs must be at least 1");
        if (!(h_min > 0.0) || h_min > h_max) fail("heights must satisfy 0 < h_min <= h_max");
        if (f_carrier <= 0.0) fail("f_carrier must be positive");
        if (m_los <= 0.0 || m_nlos <= 0.0) fail("Nakagami shapes must be positive");
        if (psi_min > psi_max || psi_min < 0.0) fail("powers must satisfy 0 <= psi_min <= psi_max");
        if (i_th < 0.0) fail("i_th must be non-negative");
        if (bandwidth_cap < 0.0) fail("bandwidth_cap must be non-negative");
        if (link_cap < 0) fail("link_cap must be non-negative");
        if (backhaul_cap < 0.0) fail("backhaul_cap must be non-negative");
        if (demand_menu.empty()) fail("demand_menu must be non-empty");
        for (double r : demand_menu)
            if (r <= 0.0) fail("demand_menu entries must be positive");
        if (epsilon <= 0.0) fail("epsilon must be positive");
        if (rho_c < 0.0) fail("rho_c must be non-negative");
        if (baseline_height < h_min || baseline_height > h_max)
            fail("baseline_height must lie within [h_min, h_max]");
        if (ga.pop_size < 2) fail("ga.pop_size must be at least 2");
        if (!(ga.elite_frac > 0.0 && ga.elite_frac < 1.0)) fail("ga.elite_frac must be in (0, 1)");
        if (ga.mutation_rate < 0.0) fail("ga.mutation_rate must be non-negative");
        if (ga.genes_mutated < 0 || ga.genes_mutated > 3 * num_uavs)
            fail("ga.genes_mutated must be in [0, 3*num_uavs]");
        if (ga.max_generations < 1) fail("ga.max_generations must be at least 1");
        if (ga.stall_generations < 1) fail("ga.stall_generations must be at least 1");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

} // namespace detail

/// Applies one `key = value` assignment. Unknown keys are rejected.
inline void apply_config_entry(ScenarioConfig& cfg, const std::string& key,
                               const std::string& value) {
    auto num = [&] { return std::stod(value); };
    if (key == "area_side") cfg.area_side = num();
    else if (key == "delta") cfg.delta = num();
    else if (key == "d_min") cfg.d_min = num();
    else if (key == "num_uavs") cfg.num_uavs = static_cast<int>(num());
    else if (key == "h_min") cfg.h_min = num();
    else if (key == "h_max") cfg.h_max = num();
    else if (key == "f_carrier") cfg.f_carrier = num();
    else if (key == "alpha") cfg.alpha = num();
    else if (key == "beta") cfg.beta = num();
    else if (key == "xi_los_db") cfg.xi_los_db = num();
    else if (key == "xi_nlos_db") cfg.xi_nlos_db = num();
    else if (key == "gamma") cfg.gamma = num();
    else if (key == "m_los") cfg.m_los = num();
    else if (key == "m_nlos") cfg.m_nlos = num();
    else if (key == "psi_min") cfg.psi_min = num();
    else if (key == "psi_max") cfg.psi_max = num();
    else if (key == "i_th") cfg.i_th = num();
    else if (key == "noise_dbm") cfg.noise_dbm = num();
    else if (key == "sinr_min_db") cfg.sinr_min_db = num();
    else if (key == "bandwidth_cap") cfg.bandwidth_cap = num();
    else if (key == "link_cap") cfg.link_cap = static_cast<int>(num());
    else if (key == "backhaul_cap") cfg.backhaul_cap = num();
    else if (key == "demand_menu") cfg.demand_menu = detail::parse_list(value);
    else if (key == "epsilon") cfg.epsilon = num();
    else if (key == "rho_c") cfg.rho_c = num();
    else if (key == "baseline_height") cfg.baseline_height = num();
    else if (key == "pop_size") cfg.ga.pop_size = static_cast<int>(num());
    else if (key == "elite_frac") cfg.ga.elite_frac = num();
    else if (key == "mutation_rate") cfg.ga.mutation_rate = num();
    else if (key == "genes_mutated") cfg.ga.genes_mutated = static_cast<int>(num());
    else if (key == "max_generations") cfg.ga.max_generations = static_cast<int>(num());
    else if (key == "stall_generations") cfg.ga.stall_generations = static_cast<int>(num());
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

/// Parses `key = value` lines; '#' starts a comment, blank lines are skipped.
/// Starts from defaults, so a file only needs the keys it changes.
inline ScenarioConfig load_config(std::istream& in) {
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not a key = value assignment");
        apply_config_entry(cfg, detail::trim(line.substr(0, eq)),
                           detail::trim(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

inline ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    return load_config(in);
}

} // namespace uavnet
