#pragma once

// Three-stage association pipeline: per-TSBS max-SINR candidate selection,
// per-UAV spectral-efficiency-greedy admission under the bandwidth and link
// caps, and backhaul-rate enforcement by de-association. All tie-breaks
// resolve to the lowest index so results are reproducible.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"
#include "uavnet/types.hpp"

namespace uavnet {

/// Binary T x U attachment state with per-UAV load accounting. Row sums are
/// at most 1 by construction (served_by holds the single column or -1).
struct Association {
    int t_count = 0;
    int u_count = 0;
    std::vector<int> served_by;         // per TSBS: UAV index or -1
    std::vector<int> links_used;        // per UAV
    std::vector<double> bandwidth_used; // per UAV, Hz
    double sum_rate = 0.0;              // bit/s over active pairs

    Association() = default;
    Association(int t, int u)
        : t_count(t), u_count(u), served_by(t, -1), links_used(u, 0), bandwidth_used(u, 0.0) {}

    bool active(int i, int j) const { return served_by[i] == j; }

    int associated_count() const {
        int k = 0;
        for (int s : served_by) k += (s >= 0);
        return k;
    }
};

inline double spectral_efficiency(double sinr_lin) { return std::log2(1.0 + sinr_lin); }

/// Per-TSBS candidate: the feasible UAV with maximum SINR, kept only when
/// that SINR clears the floor (compared in linear units). -1 means none.
inline std::vector<int> select_best_uav(const LinkTable& tbl, const ScenarioConfig& cfg) {
    const double sinr_floor = db_to_linear(cfg.sinr_min_db);
    std::vector<int> candidate(tbl.t_count, -1);
    for (int i = 0; i < tbl.t_count; ++i) {
        int best = -1;
        double best_sinr = 0.0;
        for (int j = 0; j < tbl.u_count; ++j) {
            const std::size_t p = tbl.idx(i, j);
            if (!tbl.tx_feasible[p]) continue;
            if (best < 0 || tbl.sinr[p] > best_sinr) {
                best = j;
                best_sinr = tbl.sinr[p];
            }
        }
        if (best >= 0 && best_sinr >= sinr_floor) candidate[i] = best;
    }
    return candidate;
}

/// Independently per UAV, admits its candidates in descending spectral
/// efficiency (ties toward the lower TSBS id) while both the bandwidth and
/// link-count budgets hold. Rejected TSBSs are not offered elsewhere.
inline Association greedy_admit(const std::vector<int>& candidates, const LinkTable& tbl,
                                const std::vector<Tsbs>& tsbss, const ScenarioConfig& cfg) {
    Association assoc(tbl.t_count, tbl.u_count);
    for (int j = 0; j < tbl.u_count; ++j) {
        std::vector<int> list;
        for (int i = 0; i < tbl.t_count; ++i)
            if (candidates[i] == j) list.push_back(i);
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            const double se_a = spectral_efficiency(tbl.sinr[tbl.idx(a, j)]);
            const double se_b = spectral_efficiency(tbl.sinr[tbl.idx(b, j)]);
            if (se_a != se_b) return se_a > se_b;
            return a < b;
        });
        for (int i : list) {
            const double b = tbl.bandwidth_req[tbl.idx(i, j)];
            if (assoc.links_used[j] >= cfg.link_cap) continue;
            if (!(assoc.bandwidth_used[j] + b <= cfg.bandwidth_cap)) continue;
            assoc.served_by[i] = j;
            assoc.links_used[j] += 1;
            assoc.bandwidth_used[j] += b;
            assoc.sum_rate += tsbss[i].demand_bps;
        }
    }
    return assoc;
}

/// While the sum-rate exceeds the backhaul cap, drops the minimum-demand
/// TSBS of the most loaded UAV (ties toward the lower index).
inline void enforce_backhaul(Association& assoc, const std::vector<Tsbs>& tsbss,
                             const LinkTable& tbl, const ScenarioConfig& cfg) {
    while (assoc.sum_rate > cfg.backhaul_cap) {
        int uav = -1;
        for (int j = 0; j < assoc.u_count; ++j)
            if (assoc.links_used[j] > 0 && (uav < 0 || assoc.links_used[j] > assoc.links_used[uav]))
                uav = j;
        if (uav < 0) break; // nothing left to drop

        int victim = -1;
        for (int i = 0; i < assoc.t_count; ++i)
            if (assoc.served_by[i] == uav &&
                (victim < 0 || tsbss[i].demand_bps < tsbss[victim].demand_bps))
                victim = i;

        assoc.served_by[victim] = -1;
        assoc.links_used[uav] -= 1;
        assoc.bandwidth_used[uav] -= tbl.bandwidth_req[tbl.idx(victim, uav)];
        assoc.sum_rate -= tsbss[victim].demand_bps;
    }
}

/// Full pipeline. The returned matrix satisfies every constraint.
inline Association associate(const std::vector<Tsbs>& tsbss, const std::vector<Uav>& uavs,
                             const LinkTable& tbl, const ScenarioConfig& cfg) {
    (void)uavs;
    if (tsbss.empty()) return Association(0, static_cast<int>(uavs.size()));
    const std::vector<int> candidates = select_best_uav(tbl, cfg);
    Association assoc = greedy_admit(candidates, tbl, tsbss, cfg);
    enforce_backhaul(assoc, tsbss, tbl, cfg);
    return assoc;
}

/// Independent validity check: recomputes every sum from the link table and
/// demands rather than trusting the counters. Returns human-readable
/// violation messages; empty means the matrix satisfies all constraints.
/// Bandwidth and backhaul sums allow a 1e-9 relative slack for floating-point
/// re-association.
inline std::vector<std::string> check_association(const Association& assoc,
                                                  const LinkTable& tbl,
                                                  const std::vector<Tsbs>& tsbss,
                                                  const ScenarioConfig& cfg) {
    std::vector<std::string> bad;
    auto complain = [&](const std::string& msg) { bad.push_back(msg); };
    const double sinr_floor = db_to_linear(cfg.sinr_min_db);
    const double bw_slack = 1.0 + 1e-9;

    if (static_cast<int>(assoc.served_by.size()) != assoc.t_count)
        complain("served_by size mismatch");

    double total_rate = 0.0;
    for (int i = 0; i < assoc.t_count; ++i) {
        const int j = assoc.served_by[i];
        if (j < -1 || j >= assoc.u_count) {
            complain("TSBS " + std::to_string(i) + ": serving index out of range");
            continue;
        }
        if (j < 0) continue;
        const std::size_t p = tbl.idx(i, j);
        if (!tbl.tx_feasible[p])
            complain("TSBS " + std::to_string(i) + ": active link is power-infeasible");
        if (tbl.tx_power[p] < cfg.psi_min || tbl.tx_power[p] > cfg.psi_max)
            complain("TSBS " + std::to_string(i) + ": transmit power outside box");
        if (tbl.gain[p] * tbl.tx_power[p] > cfg.i_th * bw_slack)
            complain("TSBS " + std::to_string(i) + ": interference threshold exceeded");
        if (tbl.sinr[p] < sinr_floor)
            complain("TSBS " + std::to_string(i) + ": SINR below floor");
        total_rate += tsbss[i].demand_bps;
    }

    for (int j = 0; j < assoc.u_count; ++j) {
        int links = 0;
        double bw = 0.0;
        for (int i = 0; i < assoc.t_count; ++i)
            if (assoc.served_by[i] == j) {
                links += 1;
                bw += tbl.bandwidth_req[tbl.idx(i, j)];
            }
        if (links > cfg.link_cap)
            complain("UAV " + std::to_string(j) + ": link cap exceeded");
        if (bw > cfg.bandwidth_cap * bw_slack)
            complain("UAV " + std::to_string(j) + ": bandwidth cap exceeded");
    }

    if (total_rate > cfg.backhaul_cap * bw_slack) complain("backhaul cap exceeded");
    return bad;
}

/// Rows are TSBS ids, columns UAV ids, entries 0/1.
inline std::string to_csv(const Association& assoc) {
    std::ostringstream out;
    for (int i = 0; i < assoc.t_count; ++i) {
        for (int j = 0; j < assoc.u_count; ++j) {
            if (j) out << ',';
            out << (assoc.active(i, j) ? 1 : 0);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace uavnet
