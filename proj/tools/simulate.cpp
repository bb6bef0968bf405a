// Monte Carlo driver. Loads a scenario config, runs the requested methods
// over seeded realizations (optionally sweeping one constraint), and writes
// one CSV row of averaged metrics per (value, method). Output is
// byte-identical for a given config and seed, independent of --workers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "uavnet/uavnet.hpp"

namespace {

uavnet::SweepSpec parse_sweep(const std::string& text) {
    uavnet::SweepSpec sweep;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw CLI::ValidationError("--sweep expects var=v1,v2,...");
    sweep.variable = text.substr(0, eq);
    sweep.values.clear();
    std::stringstream ss(text.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) sweep.values.push_back(std::stod(item));
    return sweep;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV fronthaul placement and association simulator"};

    std::string config_path;
    std::string method = "both";
    std::string sweep_text;
    std::string out_path = "results.csv";
    std::string trace_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int runs = 1000;
    bool reoptimize = false;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    app.add_option("--config", config_path, "Scenario config file (key = value lines)");
    app.add_option("--seed", seed, "Root RNG seed (overrides the config)")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--runs", runs, "Monte Carlo realizations per point")->check(CLI::PositiveNumber);
    app.add_option("--method", method, "ga | kmeans | both")
        ->check(CLI::IsMember({"ga", "kmeans", "both"}));
    app.add_option("--sweep", sweep_text, "Sweep one variable, e.g. bandwidth_cap=0,50e6,100e6");
    app.add_flag("--reoptimize", reoptimize, "Rerun the optimizer at every sweep value");
    app.add_option("--out", out_path, "Results CSV path");
    app.add_option("--trace", trace_path, "Write the optimizer convergence trace of realization 0");
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        uavnet::ScenarioConfig cfg =
            config_path.empty() ? uavnet::ScenarioConfig{} : uavnet::load_config_file(config_path);
        if (seed_set) cfg.seed = seed;
        cfg.validate();

        uavnet::SweepSpec sweep;
        if (!sweep_text.empty()) sweep = parse_sweep(sweep_text);
        sweep.runs = runs;
        sweep.reoptimize = reoptimize;
        sweep.methods.clear();
        if (method == "ga" || method == "both") sweep.methods.push_back(uavnet::Method::ga);
        if (method == "kmeans" || method == "both") sweep.methods.push_back(uavnet::Method::kmeans);

        const std::vector<uavnet::SweepRow> rows = uavnet::run_sweep(cfg, sweep, workers);
        write_file(out_path, uavnet::to_csv(rows));
        std::printf("wrote %zu rows to %s\n", rows.size(), out_path.c_str());

        const bool has_ga = std::find(sweep.methods.begin(), sweep.methods.end(),
                                      uavnet::Method::ga) != sweep.methods.end();
        if (!trace_path.empty() && has_ga) {
            const auto res = uavnet::run_realization(cfg, uavnet::Method::ga, 0);
            write_file(trace_path, uavnet::history_csv(res.ga_history));
            std::printf("wrote %zu generations to %s\n", res.ga_history.size(),
                        trace_path.c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
