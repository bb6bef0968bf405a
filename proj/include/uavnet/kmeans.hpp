#pragma once

// Unsupervised baseline: Lloyd's algorithm on TSBS ground positions with
// k = U, farthest-point seeding from a seeded random start. UAVs sit at the
// final centroids at the configured baseline altitude; the association
// pipeline is then identical to the optimized one.

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/types.hpp"

namespace uavnet {

inline std::vector<Uav> kmeans_placement(const std::vector<Tsbs>& tsbss,
                                         const ScenarioConfig& cfg, std::mt19937_64& rng) {
    const int t = static_cast<int>(tsbss.size());
    const int k = cfg.num_uavs;
    if (t < k) throw std::invalid_argument("kmeans_placement: fewer TSBSs than clusters");

    // Farthest-point seeding: random first centre, then repeatedly the TSBS
    // farthest from its nearest chosen centre (ties toward the lower id).
    std::vector<Point2> centroids;
    std::vector<bool> chosen(t, false);
    std::uniform_int_distribution<int> first(0, t - 1);
    int idx0 = first(rng);
    centroids.push_back(tsbss[idx0].pos);
    chosen[idx0] = true;
    while (static_cast<int>(centroids.size()) < k) {
        int best = -1;
        double best_dist = -1.0;
        for (int i = 0; i < t; ++i) {
            if (chosen[i]) continue;
            double near = std::numeric_limits<double>::infinity();
            for (const auto& c : centroids)
                near = std::min(near, distance(tsbss[i].pos, c));
            if (near > best_dist) {
                best_dist = near;
                best = i;
            }
        }
        centroids.push_back(tsbss[best].pos);
        chosen[best] = true;
    }

    std::vector<int> assign(t, -1);
    for (int iter = 0; iter < 100; ++iter) {
        // Assignment step (ties toward the lower cluster index).
        bool changed = false;
        for (int i = 0; i < t; ++i) {
            int best = 0;
            double best_dist = distance(tsbss[i].pos, centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double d = distance(tsbss[i].pos, centroids[c]);
                if (d < best_dist) {
                    best_dist = d;
                    best = c;
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        if (!changed) break;

        // Update step.
        std::vector<double> sx(k, 0.0), sy(k, 0.0);
        std::vector<int> count(k, 0);
        for (int i = 0; i < t; ++i) {
            sx[assign[i]] += tsbss[i].pos.x;
            sy[assign[i]] += tsbss[i].pos.y;
            count[assign[i]] += 1;
        }
        for (int c = 0; c < k; ++c)
            if (count[c] > 0) centroids[c] = {sx[c] / count[c], sy[c] / count[c]};

        // Re-seed any empty cluster at the member farthest from its centroid,
        // stealing only from clusters that keep at least one member.
        for (int c = 0; c < k; ++c) {
            if (count[c] > 0) continue;
            int far = -1;
            double far_dist = -1.0;
            for (int i = 0; i < t; ++i) {
                if (count[assign[i]] <= 1) continue;
                const double d = distance(tsbss[i].pos, centroids[assign[i]]);
                if (d > far_dist) {
                    far_dist = d;
                    far = i;
                }
            }
            if (far < 0) continue;
            centroids[c] = tsbss[far].pos;
            count[assign[far]] -= 1;
            assign[far] = c;
            count[c] = 1;
        }
    }

    std::vector<Uav> uavs(k);
    for (int c = 0; c < k; ++c) {
        uavs[c].id = c;
        uavs[c].pos = {centroids[c].x, centroids[c].y, cfg.baseline_height};
    }
    return uavs;
}

} // namespace uavnet
