#pragma once

// Evaluation metrics for a solved instance.

#include <vector>

#include "uavnet/association.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"

namespace uavnet {

struct EvalReport {
    double sum_rate = 0.0;        // bit/s
    double assoc_fraction = 0.0;  // K / T
    double avg_bandwidth = 0.0;   // Hz, mean consumed bandwidth per UAV
    double energy_eff = 0.0;      // bit/s/W
    double total_power = 0.0;     // W
    double unassoc_fraction = 0.0;
};

struct PowerSummary {
    double energy_eff = 0.0;
    double total_power = 0.0;
};

/// Total power is the amplifier-scaled sum of the per-pair data powers over
/// active links plus per-link circuit power; energy efficiency divides the
/// sum-rate by it. An empty association reports zeros rather than erroring.
inline PowerSummary energy_efficiency(const Association& assoc, const LinkTable& tbl,
                                      const ScenarioConfig& cfg) {
    PowerSummary ps;
    const int k = assoc.associated_count();
    if (k == 0) return ps;
    double tx_sum = 0.0;
    for (int i = 0; i < assoc.t_count; ++i) {
        const int j = assoc.served_by[i];
        if (j >= 0) tx_sum += tbl.tx_power[tbl.idx(i, j)];
    }
    ps.total_power = cfg.epsilon * tx_sum + k * cfg.rho_c;
    ps.energy_eff = assoc.sum_rate / ps.total_power;
    return ps;
}

inline EvalReport make_report(const Association& assoc, const LinkTable& tbl,
                              const std::vector<Tsbs>& tsbss, const ScenarioConfig& cfg) {
    EvalReport r;
    r.sum_rate = assoc.sum_rate;
    const int t = static_cast<int>(tsbss.size());
    const int k = assoc.associated_count();
    r.assoc_fraction = t > 0 ? static_cast<double>(k) / t : 0.0;
    r.unassoc_fraction = t > 0 ? 1.0 - r.assoc_fraction : 0.0;
    double bw = 0.0;
    for (double b : assoc.bandwidth_used) bw += b;
    r.avg_bandwidth = assoc.u_count > 0 ? bw / assoc.u_count : 0.0;
    const PowerSummary ps = energy_efficiency(assoc, tbl, cfg);
    r.energy_eff = ps.energy_eff;
    r.total_power = ps.total_power;
    return r;
}

} // namespace uavnet
