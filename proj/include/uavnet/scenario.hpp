#pragma once

// Ground and aerial deployments. TSBS positions follow a Matern type-I
// hard-core process: a Poisson parent process thinned by mutual deletion of
// every pair closer than d_min. UAV starting positions are uniform within
// the region and altitude band.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/types.hpp"

namespace uavnet {

/// Mean surviving TSBS count: delta * exp(-delta * pi * d_min^2) * area.
inline double average_tsbs_count(const ScenarioConfig& cfg) {
    const double area = cfg.area_side * cfg.area_side;
    return cfg.delta * std::exp(-cfg.delta * std::numbers::pi * cfg.d_min * cfg.d_min) * area;
}

/// Samples the hard-core process and assigns each survivor a demand drawn
/// uniformly from the menu. May return an empty list; the caller decides
/// whether to resample.
///
/// The parent Poisson process is drawn on the region padded by d_min on all
/// sides and thinning considers the padded points, so the retained process
/// inside the window is the stationary one and the sample mean matches
/// average_tsbs_count without edge bias. Only in-window survivors are kept.
inline std::vector<Tsbs> deploy_tsbss(const ScenarioConfig& cfg, std::mt19937_64& rng) {
    const double pad = cfg.d_min;
    const double lo = -pad;
    const double hi = cfg.area_side + pad;
    const double padded_area = (hi - lo) * (hi - lo);

    int n = 0;
    if (cfg.delta > 0.0) {
        std::poisson_distribution<int> count_dist(cfg.delta * padded_area);
        n = count_dist(rng);
    }

    std::uniform_real_distribution<double> coord(lo, hi);
    std::vector<Point2> parents(static_cast<std::size_t>(n));
    for (auto& p : parents) {
        p.x = coord(rng);
        p.y = coord(rng);
    }

    // Type-I thinning: both members of any close pair are removed.
    std::vector<bool> keep(parents.size(), true);
    for (std::size_t i = 0; i < parents.size(); ++i)
        for (std::size_t k = i + 1; k < parents.size(); ++k)
            if (distance(parents[i], parents[k]) < cfg.d_min) {
                keep[i] = false;
                keep[k] = false;
            }

    std::vector<Tsbs> out;
    std::uniform_int_distribution<std::size_t> pick(0, cfg.demand_menu.size() - 1);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        if (!keep[i]) continue;
        const auto& p = parents[i];
        if (p.x < 0.0 || p.x > cfg.area_side || p.y < 0.0 || p.y > cfg.area_side) continue;
        Tsbs t;
        t.id = static_cast<int>(out.size());
        t.pos = p;
        t.demand_bps = cfg.demand_menu[pick(rng)];
        out.push_back(t);
    }
    return out;
}

/// U UAVs with (x, y) uniform over the region and h uniform in [h_min, h_max].
inline std::vector<Uav> init_uavs(const ScenarioConfig& cfg, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(0.0, cfg.area_side);
    std::uniform_real_distribution<double> height(cfg.h_min, cfg.h_max);
    std::vector<Uav> out(static_cast<std::size_t>(cfg.num_uavs));
    for (int j = 0; j < cfg.num_uavs; ++j) {
        out[j].id = j;
        out[j].pos.x = coord(rng);
        out[j].pos.y = coord(rng);
        out[j].pos.h = height(rng);
    }
    return out;
}

} // namespace uavnet
