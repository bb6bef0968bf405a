#pragma once

// Brute-force references for small instances, used by tests. The exhaustive
// search enumerates every assignment with row sums at most one and applies
// the constraints as a feasibility filter, so it bounds what any heuristic
// can achieve; the grid search does the same over a coarse lattice of UAV
// positions.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavnet/association.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"
#include "uavnet/types.hpp"

namespace uavnet::oracle {

namespace detail {

/// Row-major binary-matrix lexicographic order on per-TSBS choices. A row
/// with no assignment is all zeros and therefore smallest; among assigned
/// rows the one in a higher column sorts earlier.
inline bool choice_row_less(int a, int b) {
    if (a == b) return false;
    if (a < 0) return true;
    if (b < 0) return false;
    return a > b;
}

inline bool choices_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return choice_row_less(a[i], b[i]);
    }
    return false;
}

} // namespace detail

struct ExhaustiveResult {
    Association assoc;
    double sum_rate = 0.0;
};

/// Maximum feasible sum-rate over all 0/1 assignment matrices with row sums
/// at most one. Ties resolve to the lexicographically smallest matrix.
/// Rejects instances beyond T = 12, U = 3.
inline ExhaustiveResult exhaustive_association(const std::vector<Tsbs>& tsbss,
                                               const std::vector<Uav>& uavs,
                                               const LinkTable& tbl,
                                               const ScenarioConfig& cfg) {
    const int t = static_cast<int>(tsbss.size());
    const int u = static_cast<int>(uavs.size());
    if (t > 12 || u > 3)
        throw std::invalid_argument("exhaustive_association: instance over enumeration bound");

    const double sinr_floor = db_to_linear(cfg.sinr_min_db);
    std::vector<int> choice(t, -1);
    std::vector<int> links(u, 0);
    std::vector<double> bw(u, 0.0);
    double rate = 0.0;

    std::vector<int> best_choice;
    double best_rate = -1.0;

    auto record = [&] {
        if (rate > best_rate ||
            (rate == best_rate && detail::choices_less(choice, best_choice))) {
            best_rate = rate;
            best_choice = choice;
        }
    };

    auto recurse = [&](auto&& self, int i) -> void {
        if (i == t) {
            record();
            return;
        }
        for (int j = -1; j < u; ++j) {
            if (j >= 0) {
                const std::size_t p = tbl.idx(i, j);
                if (!tbl.tx_feasible[p]) continue;
                if (tbl.sinr[p] < sinr_floor) continue;
                if (links[j] + 1 > cfg.link_cap) continue;
                if (!(bw[j] + tbl.bandwidth_req[p] <= cfg.bandwidth_cap)) continue;
                if (rate + tsbss[i].demand_bps > cfg.backhaul_cap) continue;
                choice[i] = j;
                links[j] += 1;
                bw[j] += tbl.bandwidth_req[p];
                rate += tsbss[i].demand_bps;
                self(self, i + 1);
                choice[i] = -1;
                links[j] -= 1;
                bw[j] -= tbl.bandwidth_req[p];
                rate -= tsbss[i].demand_bps;
            } else {
                self(self, i + 1);
            }
        }
    };
    recurse(recurse, 0);

    ExhaustiveResult res;
    res.assoc = Association(t, u);
    for (int i = 0; i < t; ++i) {
        const int j = best_choice.empty() ? -1 : best_choice[i];
        if (j < 0) continue;
        res.assoc.served_by[i] = j;
        res.assoc.links_used[j] += 1;
        res.assoc.bandwidth_used[j] += tbl.bandwidth_req[tbl.idx(i, j)];
        res.assoc.sum_rate += tsbss[i].demand_bps;
    }
    res.sum_rate = res.assoc.sum_rate;
    return res;
}

struct GridSpec {
    int nx = 5;
    int ny = 5;
    int nh = 3;
};

struct GridResult {
    std::vector<Point3> positions;
    double fitness = 0.0;
};

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = 0.5 * (lo + hi);
        return v;
    }
    for (int k = 0; k < n; ++k) v[k] = lo + (hi - lo) * k / (n - 1);
    return v;
}

} // namespace detail

/// Evaluates the pipeline over the Cartesian lattice of candidate positions
/// (the same grid for every UAV) and returns the best tuple, first found on
/// ties. Rejects U > 2 or more than 10^4 candidate tuples.
inline GridResult grid_search_positions(const std::vector<Tsbs>& tsbss,
                                        const FadingTable& fading, const ScenarioConfig& cfg,
                                        const GridSpec& grid) {
    const int u = cfg.num_uavs;
    if (u > 2) throw std::invalid_argument("grid_search_positions: more than two UAVs");
    const long per_uav = static_cast<long>(grid.nx) * grid.ny * grid.nh;
    long tuples = 1;
    for (int j = 0; j < u; ++j) tuples *= per_uav;
    if (tuples > 10000)
        throw std::invalid_argument("grid_search_positions: grid too large");

    const auto xs = detail::linspace(0.0, cfg.area_side, grid.nx);
    const auto ys = detail::linspace(0.0, cfg.area_side, grid.ny);
    const auto hs = detail::linspace(cfg.h_min, cfg.h_max, grid.nh);

    std::vector<Point3> sites;
    sites.reserve(per_uav);
    for (double x : xs)
        for (double y : ys)
            for (double h : hs) sites.push_back({x, y, h});

    GridResult best;
    best.fitness = -1.0;
    std::vector<int> site_idx(u, 0);
    std::vector<Uav> uavs(u);
    for (long tuple = 0; tuple < tuples; ++tuple) {
        long rem = tuple;
        for (int j = 0; j < u; ++j) {
            site_idx[j] = static_cast<int>(rem % per_uav);
            rem /= per_uav;
        }
        for (int j = 0; j < u; ++j) {
            uavs[j].id = j;
            uavs[j].pos = sites[site_idx[j]];
        }
        const LinkTable tbl = build_link_table(tsbss, uavs, cfg, fading);
        const double fs = associate(tsbss, uavs, tbl, cfg).sum_rate;
        if (fs > best.fitness) {
            best.fitness = fs;
            best.positions.clear();
            for (const auto& v : uavs) best.positions.push_back(v.pos);
        }
    }
    return best;
}

} // namespace uavnet::oracle
