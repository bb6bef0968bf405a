#pragma once

// Shared helpers for hand-built instances: a link table with prescribed
// SINRs whose power fields satisfy the interference and box constraints
// exactly, so constraint checks exercise only what a test controls.

#include <limits>
#include <vector>

#include "uavnet/association.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"
#include "uavnet/types.hpp"

namespace testutil {

inline std::vector<uavnet::Tsbs> make_tsbss(const std::vector<double>& demands) {
    std::vector<uavnet::Tsbs> out(demands.size());
    for (std::size_t i = 0; i < demands.size(); ++i) {
        out[i].id = static_cast<int>(i);
        out[i].pos = {100.0 * static_cast<double>(i), 0.0};
        out[i].demand_bps = demands[i];
    }
    return out;
}

inline std::vector<uavnet::Uav> make_uavs(int u, double h = 500.0) {
    std::vector<uavnet::Uav> out(u);
    for (int j = 0; j < u; ++j) out[j] = {j, {500.0 * j, 500.0, h}};
    return out;
}

/// sinr[i][j] in linear units; 0 marks an infeasible link. Transmit power is
/// pinned at 1 W with gain i_th so g * omega == i_th holds exactly.
inline uavnet::LinkTable make_table(const std::vector<std::vector<double>>& sinr,
                                    const std::vector<double>& demands,
                                    const uavnet::ScenarioConfig& cfg) {
    const int t = static_cast<int>(sinr.size());
    const int u = t > 0 ? static_cast<int>(sinr[0].size()) : 0;
    uavnet::LinkTable tbl;
    tbl.t_count = t;
    tbl.u_count = u;
    tbl.noise_w = uavnet::dbm_to_watt(cfg.noise_dbm);
    const std::size_t n = static_cast<std::size_t>(t) * u;
    tbl.horiz_dist.assign(n, 100.0);
    tbl.elevation_deg.assign(n, 45.0);
    tbl.slant_dist.assign(n, 141.4);
    tbl.p_los.assign(n, 1.0);
    tbl.loss_db.assign(n, 100.0);
    tbl.fading_db.assign(n, 0.0);
    tbl.gain.assign(n, cfg.i_th);
    tbl.tx_power.assign(n, 1.0);
    tbl.tx_feasible.assign(n, 1);
    tbl.rx_power.assign(n, 0.0);
    tbl.sinr.assign(n, 0.0);
    tbl.bandwidth_req.assign(n, std::numeric_limits<double>::infinity());
    tbl.broadcast_power.assign(u, 1.0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < u; ++j) {
            const std::size_t p = tbl.idx(i, j);
            tbl.sinr[p] = sinr[i][j];
            tbl.tx_feasible[p] = sinr[i][j] > 0.0 ? 1 : 0;
            if (sinr[i][j] > 0.0)
                tbl.bandwidth_req[p] = demands[i] / std::log2(1.0 + sinr[i][j]);
        }
    return tbl;
}

} // namespace testutil
