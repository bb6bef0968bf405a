#pragma once

// Air-to-ground channel: geometry, LoS probability, path loss, Nakagami
// small-scale fading, per-link transmit power under an interference cap,
// and the full SINR / required-bandwidth table consumed by association.
//
// Power control. Each UAV j carries one per-pair optimal data power
//     omega_ij = min(psi_max, i_th / g_ij),
// feasible when omega_ij >= psi_min; this is what the interference and power
// box constraints and the energy metrics are checked against. SINR, however,
// is measured on the initialization broadcast: UAV j transmits a single
// signal at the largest power that respects the interference threshold at
// every TSBS simultaneously,
//     bc_j = clamp(i_th / max_i g_ij, psi_min, psi_max),
// so the received level and the cross-UAV interference both depend on where
// the UAVs actually are.

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/types.hpp"

namespace uavnet {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// Ground-plane Euclidean distance between a TSBS and a UAV.
inline double horizontal_distance(const Point2& tsbs, const Point3& uav) {
    return std::hypot(tsbs.x - uav.x, tsbs.y - uav.y);
}

/// Elevation angle in degrees; 90 when the UAV is directly overhead.
inline double elevation_angle_deg(double horiz_dist, double height) {
    if (height <= 0.0)
        throw std::invalid_argument("elevation_angle_deg: height must be positive");
    if (horiz_dist == 0.0) return 90.0;
    return std::atan(height / horiz_dist) * 180.0 / std::numbers::pi;
}

inline double slant_distance(double horiz_dist, double height) {
    return std::hypot(horiz_dist, height);
}

/// 1 / (1 + alpha * exp(-beta * (theta - alpha))); NLoS probability is the
/// complement.
inline double los_probability(double theta_deg, double alpha, double beta) {
    return 1.0 / (1.0 + alpha * std::exp(-beta * (theta_deg - alpha)));
}

/// Free-space term plus the elevation-weighted LoS/NLoS excess-loss mixture:
/// 10 * gamma * log10(4 pi s / lambda) + pL * xi_los + (1 - pL) * xi_nlos.
inline double path_loss_db(double slant_dist, double p_los, const ScenarioConfig& cfg) {
    if (slant_dist <= 0.0)
        throw std::invalid_argument("path_loss_db: slant distance must be positive");
    const double wavelength = kSpeedOfLight / cfg.f_carrier;
    const double fspl =
        10.0 * cfg.gamma * std::log10(4.0 * std::numbers::pi * slant_dist / wavelength);
    return fspl + p_los * cfg.xi_los_db + (1.0 - p_los) * cfg.xi_nlos_db;
}

/// Unit-mean fading power gain (squared Nakagami-m envelope): Gamma(m, 1/m).
inline double fading_power_gain(double shape, std::mt19937_64& rng) {
    std::gamma_distribution<double> dist(shape, 1.0 / shape);
    return dist(rng);
}

/// Fading term in dB: p_los * zeta_los + (1 - p_los) * zeta_nlos, where each
/// zeta is the dB value of a fresh unit-mean Gamma power gain.
inline double sample_fading_db(double p_los, const ScenarioConfig& cfg, std::mt19937_64& rng) {
    const double zeta_los = linear_to_db(fading_power_gain(cfg.m_los, rng));
    const double zeta_nlos = linear_to_db(fading_power_gain(cfg.m_nlos, rng));
    return p_los * zeta_los + (1.0 - p_los) * zeta_nlos;
}

/// Per-pair fading draws frozen for a whole realization. The optimizer moves
/// UAVs freely, which changes the LoS mixing weight, but the underlying LoS
/// and NLoS gains per (TSBS, UAV-index) pair stay fixed so the fitness
/// landscape is deterministic.
struct FadingTable {
    int t_count = 0;
    int u_count = 0;
    std::vector<double> zeta_los_db;  // size T*U
    std::vector<double> zeta_nlos_db; // size T*U

    static FadingTable sample(int t_count, int u_count, const ScenarioConfig& cfg,
                              std::mt19937_64& rng) {
        FadingTable f;
        f.t_count = t_count;
        f.u_count = u_count;
        const std::size_t n = static_cast<std::size_t>(t_count) * u_count;
        f.zeta_los_db.resize(n);
        f.zeta_nlos_db.resize(n);
        for (std::size_t p = 0; p < n; ++p) {
            f.zeta_los_db[p] = linear_to_db(fading_power_gain(cfg.m_los, rng));
            f.zeta_nlos_db[p] = linear_to_db(fading_power_gain(cfg.m_nlos, rng));
        }
        return f;
    }

    double mix_db(int i, int j, double p_los) const {
        const std::size_t p = static_cast<std::size_t>(i) * u_count + j;
        return p_los * zeta_los_db[p] + (1.0 - p_los) * zeta_nlos_db[p];
    }
};

struct PowerDecision {
    double watts = 0.0;
    bool feasible = false;
};

/// Largest data power that respects the interference threshold on the link,
/// capped by psi_max; infeasible (not an error) when it falls below psi_min.
inline PowerDecision optimal_power(double g_lin, const ScenarioConfig& cfg) {
    PowerDecision p;
    p.watts = std::min(cfg.psi_max, cfg.i_th / g_lin);
    p.feasible = p.watts >= cfg.psi_min;
    return p;
}

/// Everything association needs, for every (TSBS, UAV) pair.
struct LinkTable {
    int t_count = 0;
    int u_count = 0;
    double noise_w = 0.0;
    std::vector<double> horiz_dist;     // m
    std::vector<double> elevation_deg;
    std::vector<double> slant_dist;     // m
    std::vector<double> p_los;
    std::vector<double> loss_db;
    std::vector<double> fading_db;
    std::vector<double> gain;           // linear fading/path-loss product
    std::vector<double> tx_power;       // per-pair optimal data power, W
    std::vector<char> tx_feasible;
    std::vector<double> rx_power;       // received broadcast power, W
    std::vector<double> sinr;           // linear; 0 on infeasible links
    std::vector<double> bandwidth_req;  // Hz; +inf on infeasible links
    std::vector<double> broadcast_power; // per UAV, W

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * u_count + j;
    }
};

/// Builds the link table for the given positions using frozen fading draws.
inline LinkTable build_link_table(const std::vector<Tsbs>& tsbss, const std::vector<Uav>& uavs,
                                  const ScenarioConfig& cfg, const FadingTable& fading) {
    if (tsbss.empty() || uavs.empty())
        throw std::invalid_argument("build_link_table: need at least one TSBS and one UAV");

    const int t_count = static_cast<int>(tsbss.size());
    const int u_count = static_cast<int>(uavs.size());
    LinkTable tbl;
    tbl.t_count = t_count;
    tbl.u_count = u_count;
    tbl.noise_w = dbm_to_watt(cfg.noise_dbm);
    const std::size_t n = static_cast<std::size_t>(t_count) * u_count;
    tbl.horiz_dist.resize(n);
    tbl.elevation_deg.resize(n);
    tbl.slant_dist.resize(n);
    tbl.p_los.resize(n);
    tbl.loss_db.resize(n);
    tbl.fading_db.resize(n);
    tbl.gain.resize(n);
    tbl.tx_power.resize(n);
    tbl.tx_feasible.resize(n);
    tbl.rx_power.resize(n);
    tbl.sinr.resize(n);
    tbl.bandwidth_req.resize(n);
    tbl.broadcast_power.assign(u_count, 0.0);

    for (int i = 0; i < t_count; ++i) {
        for (int j = 0; j < u_count; ++j) {
            const std::size_t p = tbl.idx(i, j);
            const double d = horizontal_distance(tsbss[i].pos, uavs[j].pos);
            const double h = uavs[j].pos.h;
            const double theta = elevation_angle_deg(d, h);
            const double s = slant_distance(d, h);
            const double pl = los_probability(theta, cfg.alpha, cfg.beta);
            const double loss = path_loss_db(s, pl, cfg);
            const double fade = fading.mix_db(i, j, pl);
            tbl.horiz_dist[p] = d;
            tbl.elevation_deg[p] = theta;
            tbl.slant_dist[p] = s;
            tbl.p_los[p] = pl;
            tbl.loss_db[p] = loss;
            tbl.fading_db[p] = fade;
            tbl.gain[p] = db_to_linear(fade - loss);
            const PowerDecision pd = optimal_power(tbl.gain[p], cfg);
            tbl.tx_power[p] = pd.watts;
            tbl.tx_feasible[p] = pd.feasible ? 1 : 0;
        }
    }

    // One broadcast per UAV: the strongest receiver sits exactly at i_th.
    for (int j = 0; j < u_count; ++j) {
        double g_max = 0.0;
        for (int i = 0; i < t_count; ++i) g_max = std::max(g_max, tbl.gain[tbl.idx(i, j)]);
        const double bc = g_max > 0.0 ? cfg.i_th / g_max : cfg.psi_max;
        tbl.broadcast_power[j] = std::min(cfg.psi_max, std::max(cfg.psi_min, bc));
    }

    for (int i = 0; i < t_count; ++i) {
        double total = 0.0;
        for (int k = 0; k < u_count; ++k)
            total += tbl.broadcast_power[k] * tbl.gain[tbl.idx(i, k)];
        for (int j = 0; j < u_count; ++j) {
            const std::size_t p = tbl.idx(i, j);
            const double rx = tbl.broadcast_power[j] * tbl.gain[p];
            tbl.rx_power[p] = rx;
            const double interference = total - rx;
            tbl.sinr[p] = tbl.tx_feasible[p] ? rx / (tbl.noise_w + interference) : 0.0;
            tbl.bandwidth_req[p] = tbl.sinr[p] > 0.0
                                       ? tsbss[i].demand_bps / std::log2(1.0 + tbl.sinr[p])
                                       : std::numeric_limits<double>::infinity();
        }
    }
    return tbl;
}

/// Variant that draws fresh fading for every pair.
inline LinkTable build_link_table(const std::vector<Tsbs>& tsbss, const std::vector<Uav>& uavs,
                                  const ScenarioConfig& cfg, std::mt19937_64& rng) {
    const FadingTable fading = FadingTable::sample(static_cast<int>(tsbss.size()),
                                                   static_cast<int>(uavs.size()), cfg, rng);
    return build_link_table(tsbss, uavs, cfg, fading);
}

/// Debug dump, one row per pair.
inline void dump_csv(const LinkTable& tbl, std::ostream& out) {
    out << "i,j,d,theta,s,p_los,gamma_db,fading_db,omega,sinr_db,b_req,feasible\n";
    for (int i = 0; i < tbl.t_count; ++i)
        for (int j = 0; j < tbl.u_count; ++j) {
            const std::size_t p = tbl.idx(i, j);
            out << i << ',' << j << ',' << tbl.horiz_dist[p] << ',' << tbl.elevation_deg[p]
                << ',' << tbl.slant_dist[p] << ',' << tbl.p_los[p] << ',' << tbl.loss_db[p]
                << ',' << tbl.fading_db[p] << ',' << tbl.tx_power[p] << ','
                << (tbl.sinr[p] > 0.0 ? linear_to_db(tbl.sinr[p])
                                      : -std::numeric_limits<double>::infinity())
                << ',' << tbl.bandwidth_req[p] << ',' << int(tbl.tx_feasible[p]) << '\n';
        }
}

} // namespace uavnet
