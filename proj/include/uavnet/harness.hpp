#pragma once

// Monte Carlo orchestration: one realization samples a deployment, demands
// and fading, places the UAVs by the requested method, associates, and
// reports. Sweeps repeat that over a list of constraint values with
// per-realization seeds shared across methods and values, so curves are
// paired. Workers only parallelize over realization indices; results land in
// indexed slots and aggregation is sequential, making output byte-identical
// regardless of worker count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "uavnet/association.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"
#include "uavnet/ga.hpp"
#include "uavnet/kmeans.hpp"
#include "uavnet/metrics.hpp"
#include "uavnet/rng.hpp"
#include "uavnet/scenario.hpp"

namespace uavnet {

enum class Method { ga, kmeans };

inline const char* method_name(Method m) { return m == Method::ga ? "ga" : "kmeans"; }

struct RealizationResult {
    std::vector<Tsbs> tsbss;
    std::vector<Uav> uavs;
    Association assoc;
    EvalReport report;
    std::vector<ga::GenStats> ga_history; // empty for the baseline method
};

namespace detail {

/// Deployment with empty realizations resampled on advanced substreams.
inline std::vector<Tsbs> sample_deployment(const ScenarioConfig& cfg, std::uint64_t realization) {
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        auto stream = rng::substream(cfg.seed, realization, rng::Stream::tsbs_deploy, attempt);
        auto tsbss = deploy_tsbss(cfg, stream);
        if (!tsbss.empty()) return tsbss;
    }
    throw std::runtime_error("sample_deployment: no non-empty deployment in 1000 attempts");
}

struct ScenarioDraw {
    std::vector<Tsbs> tsbss;
    FadingTable fading;
};

inline ScenarioDraw draw_scenario(const ScenarioConfig& cfg, std::uint64_t realization) {
    ScenarioDraw d;
    d.tsbss = sample_deployment(cfg, realization);
    auto fade_stream = rng::substream(cfg.seed, realization, rng::Stream::fading);
    d.fading = FadingTable::sample(static_cast<int>(d.tsbss.size()), cfg.num_uavs, cfg,
                                   fade_stream);
    return d;
}

inline RealizationResult finish(const ScenarioConfig& cfg, ScenarioDraw&& draw,
                                std::vector<Uav>&& uavs) {
    RealizationResult r;
    r.tsbss = std::move(draw.tsbss);
    r.uavs = std::move(uavs);
    const LinkTable tbl = build_link_table(r.tsbss, r.uavs, cfg, draw.fading);
    r.assoc = associate(r.tsbss, r.uavs, tbl, cfg);
    r.report = make_report(r.assoc, tbl, r.tsbss, cfg);
    return r;
}

} // namespace detail

/// Full pipeline for one realization of the given method.
inline RealizationResult run_realization(const ScenarioConfig& cfg, Method method,
                                         std::uint64_t realization) {
    detail::ScenarioDraw draw = detail::draw_scenario(cfg, realization);
    if (method == Method::ga) {
        const std::uint64_t ga_seed = rng::derive_seed(cfg.seed, realization, rng::Stream::ga);
        ga::Result res = ga::run(draw.tsbss, draw.fading, cfg, ga_seed);
        RealizationResult r = detail::finish(cfg, std::move(draw), std::move(res.uavs));
        r.ga_history = std::move(res.history);
        return r;
    }
    auto km_stream = rng::substream(cfg.seed, realization, rng::Stream::kmeans);
    std::vector<Uav> uavs = kmeans_placement(draw.tsbss, cfg, km_stream);
    return detail::finish(cfg, std::move(draw), std::move(uavs));
}

/// Same scenario streams as run_realization but with externally supplied UAV
/// positions; used when sweeping constraints around a fixed placement.
inline RealizationResult evaluate_positions(const ScenarioConfig& cfg,
                                            const std::vector<Point3>& positions,
                                            std::uint64_t realization) {
    detail::ScenarioDraw draw = detail::draw_scenario(cfg, realization);
    std::vector<Uav> uavs(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) uavs[j] = {static_cast<int>(j), positions[j]};
    return detail::finish(cfg, std::move(draw), std::move(uavs));
}

struct SweepSpec {
    std::string variable = "none"; // none | bandwidth_cap | link_cap | backhaul_cap | delta
    std::vector<double> values = {0.0};
    std::vector<Method> methods = {Method::ga, Method::kmeans};
    int runs = 1;
    bool reoptimize = false; // rerun the optimizer at every sweep value

    void validate() const {
        if (values.empty()) throw std::invalid_argument("sweep: values must be non-empty");
        for (std::size_t k = 1; k < values.size(); ++k)
            if (!(values[k - 1] < values[k]))
                throw std::invalid_argument("sweep: values must be sorted ascending");
        if (runs < 1) throw std::invalid_argument("sweep: runs must be at least 1");
        if (methods.empty()) throw std::invalid_argument("sweep: methods must be non-empty");
        if (variable != "none" && variable != "bandwidth_cap" && variable != "link_cap" &&
            variable != "backhaul_cap" && variable != "delta")
            throw std::invalid_argument("sweep: unknown variable '" + variable + "'");
    }
};

inline ScenarioConfig apply_sweep_value(ScenarioConfig cfg, const std::string& variable,
                                        double value) {
    if (variable == "bandwidth_cap") cfg.bandwidth_cap = value;
    else if (variable == "link_cap") cfg.link_cap = static_cast<int>(std::lround(value));
    else if (variable == "backhaul_cap") cfg.backhaul_cap = value;
    else if (variable == "delta") cfg.delta = value;
    else if (variable != "none")
        throw std::invalid_argument("sweep: unknown variable '" + variable + "'");
    return cfg;
}

struct SweepRow {
    Method method = Method::ga;
    std::string sweep_var;
    double sweep_value = 0.0;
    int runs = 0;
    double sum_rate_mean = 0.0;
    double sum_rate_se = 0.0;
    double assoc_frac_mean = 0.0;
    double assoc_frac_se = 0.0;
    double avg_bw_mean = 0.0;
    double energy_eff_mean = 0.0;
    double total_power_mean = 0.0;
};

/// Runs fn(0..count-1) on up to `workers` threads. Index order of side
/// effects is up to the caller; slots should be preallocated.
template <typename Fn>
inline void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t r = 0; r < count; ++r) fn(r);
        return;
    }
    std::atomic<std::size_t> next{0};
    const int n = std::min<int>(workers, static_cast<int>(count));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int w = 0; w < n; ++w)
        pool.emplace_back([&] {
            for (std::size_t r = next.fetch_add(1); r < count; r = next.fetch_add(1)) fn(r);
        });
    for (auto& th : pool) th.join();
}

namespace detail {

struct Accumulator {
    std::vector<EvalReport> slots;

    SweepRow reduce(Method m, const std::string& var, double value) const {
        SweepRow row;
        row.method = m;
        row.sweep_var = var;
        row.sweep_value = value;
        row.runs = static_cast<int>(slots.size());
        const double n = static_cast<double>(slots.size());
        double sr = 0.0, af = 0.0, bw = 0.0, ee = 0.0, tp = 0.0;
        for (const auto& r : slots) {
            sr += r.sum_rate;
            af += r.assoc_fraction;
            bw += r.avg_bandwidth;
            ee += r.energy_eff;
            tp += r.total_power;
        }
        row.sum_rate_mean = sr / n;
        row.assoc_frac_mean = af / n;
        row.avg_bw_mean = bw / n;
        row.energy_eff_mean = ee / n;
        row.total_power_mean = tp / n;
        if (slots.size() > 1) {
            double vs = 0.0, va = 0.0;
            for (const auto& r : slots) {
                vs += (r.sum_rate - row.sum_rate_mean) * (r.sum_rate - row.sum_rate_mean);
                va += (r.assoc_fraction - row.assoc_frac_mean) *
                      (r.assoc_fraction - row.assoc_frac_mean);
            }
            row.sum_rate_se = std::sqrt(vs / (n - 1.0) / n);
            row.assoc_frac_se = std::sqrt(va / (n - 1.0) / n);
        }
        return row;
    }
};

} // namespace detail

/// One row per (value, method), means over `runs` paired realizations.
/// With reoptimize off, the optimizer runs once per realization at the base
/// config and its positions are re-evaluated at every sweep value; with it
/// on, the optimizer reruns at every value.
inline std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const SweepSpec& sweep,
                                       int workers = 1) {
    base.validate();
    sweep.validate();

    const bool wants_ga =
        std::find(sweep.methods.begin(), sweep.methods.end(), Method::ga) != sweep.methods.end();
    std::vector<std::vector<Point3>> fixed(sweep.runs);
    if (wants_ga && !sweep.reoptimize) {
        parallel_for(static_cast<std::size_t>(sweep.runs), workers, [&](std::size_t r) {
            const RealizationResult res = run_realization(base, Method::ga, r);
            fixed[r].reserve(res.uavs.size());
            for (const auto& v : res.uavs) fixed[r].push_back(v.pos);
        });
    }

    std::vector<SweepRow> rows;
    for (double value : sweep.values) {
        const ScenarioConfig cfg = apply_sweep_value(base, sweep.variable, value);
        for (Method m : sweep.methods) {
            detail::Accumulator acc;
            acc.slots.resize(sweep.runs);
            parallel_for(static_cast<std::size_t>(sweep.runs), workers, [&](std::size_t r) {
                if (m == Method::ga && !sweep.reoptimize)
                    acc.slots[r] = evaluate_positions(cfg, fixed[r], r).report;
                else
                    acc.slots[r] = run_realization(cfg, m, r).report;
            });
            rows.push_back(acc.reduce(m, sweep.variable, value));
        }
    }
    return rows;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace detail

inline std::string csv_header() {
    return "method,sweep_var,sweep_value,runs,sum_rate_mean,sum_rate_se,assoc_frac_mean,"
           "assoc_frac_se,avg_bw_mean,energy_eff_mean,total_power_mean\n";
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = csv_header();
    for (const auto& r : rows) {
        out += method_name(r.method);
        out += ',';
        out += r.sweep_var;
        out += ',';
        out += detail::format_double(r.sweep_value);
        out += ',';
        out += std::to_string(r.runs);
        for (double v : {r.sum_rate_mean, r.sum_rate_se, r.assoc_frac_mean, r.assoc_frac_se,
                         r.avg_bw_mean, r.energy_eff_mean, r.total_power_mean}) {
            out += ',';
            out += detail::format_double(v);
        }
        out += '\n';
    }
    return out;
}

/// Convergence trace of one optimizer run: generation, best, mean fitness.
inline std::string history_csv(const std::vector<ga::GenStats>& history) {
    std::string out = "generation,best_fitness,mean_fitness\n";
    for (std::size_t g = 0; g < history.size(); ++g) {
        out += std::to_string(g + 1);
        out += ',';
        out += detail::format_double(history[g].best);
        out += ',';
        out += detail::format_double(history[g].mean);
        out += '\n';
    }
    return out;
}

} // namespace uavnet
