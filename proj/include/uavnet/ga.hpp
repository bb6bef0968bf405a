#pragma once

// Mutation-only genetic algorithm for joint 3D UAV positioning. A chromosome
// is the flattened (x, y, h) vector of all UAVs; fitness is the sum-rate the
// association pipeline achieves at those positions under the realization's
// frozen fading. Each generation keeps the top elite fraction unchanged and
// fills the rest with roulette-selected, mutated copies; there is no
// crossover. The loop stops once the best fitness has not changed for
// stall_generations consecutive generations.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "uavnet/association.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"
#include "uavnet/rng.hpp"
#include "uavnet/types.hpp"

namespace uavnet::ga {

struct Chromosome {
    std::vector<double> genes; // x1, y1, h1, x2, y2, h2, ...
    std::optional<double> fitness;
};

struct GenStats {
    double best = 0.0;
    double mean = 0.0;
};

struct Result {
    Chromosome best;
    std::vector<Uav> uavs;
    Association assoc;
    double fitness = 0.0;
    std::vector<GenStats> history; // one entry per evaluated generation
};

inline std::vector<Uav> decode(const Chromosome& c) {
    std::vector<Uav> uavs(c.genes.size() / 3);
    for (std::size_t j = 0; j < uavs.size(); ++j) {
        uavs[j].id = static_cast<int>(j);
        uavs[j].pos = {c.genes[3 * j], c.genes[3 * j + 1], c.genes[3 * j + 2]};
    }
    return uavs;
}

inline std::vector<Chromosome> init_population(const ScenarioConfig& cfg, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(0.0, cfg.area_side);
    std::uniform_real_distribution<double> height(cfg.h_min, cfg.h_max);
    std::vector<Chromosome> pop(static_cast<std::size_t>(cfg.ga.pop_size));
    for (auto& c : pop) {
        c.genes.resize(static_cast<std::size_t>(3) * cfg.num_uavs);
        for (int j = 0; j < cfg.num_uavs; ++j) {
            c.genes[3 * j] = coord(rng);
            c.genes[3 * j + 1] = coord(rng);
            c.genes[3 * j + 2] = height(rng);
        }
    }
    return pop;
}

/// Sum-rate achieved by the pipeline at the chromosome's positions.
inline double evaluate(const Chromosome& c, const std::vector<Tsbs>& tsbss,
                       const FadingTable& fading, const ScenarioConfig& cfg) {
    if (tsbss.empty()) return 0.0;
    const std::vector<Uav> uavs = decode(c);
    const LinkTable tbl = build_link_table(tsbss, uavs, cfg, fading);
    return associate(tsbss, uavs, tbl, cfg).sum_rate;
}

/// Indices of the top floor(elite_frac * S) chromosomes, best first; ties
/// resolve to the lower population index.
inline std::vector<std::size_t> elite_indices(const std::vector<Chromosome>& pop,
                                              const GaConfig& ga) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *pop[a].fitness > *pop[b].fitness;
    });
    const auto count = static_cast<std::size_t>(ga.elite_frac * pop.size());
    order.resize(count);
    return order;
}

inline std::vector<Chromosome> select_elites(const std::vector<Chromosome>& pop,
                                             const GaConfig& ga) {
    std::vector<Chromosome> elites;
    for (std::size_t idx : elite_indices(pop, ga)) elites.push_back(pop[idx]);
    return elites;
}

/// Fitness-proportional draws with replacement from the full population.
/// Falls back to uniform when every fitness is zero.
inline std::vector<std::size_t> roulette_indices(const std::vector<Chromosome>& pop,
                                                 std::size_t count, std::mt19937_64& rng) {
    std::vector<double> cumulative(pop.size());
    double total = 0.0;
    for (std::size_t e = 0; e < pop.size(); ++e) {
        total += *pop[e].fitness;
        cumulative[e] = total;
    }
    std::vector<std::size_t> picks(count);
    if (total <= 0.0) {
        std::uniform_int_distribution<std::size_t> uniform(0, pop.size() - 1);
        for (auto& p : picks) p = uniform(rng);
        return picks;
    }
    std::uniform_real_distribution<double> spin(0.0, total);
    for (auto& p : picks) {
        const double target = spin(rng);
        p = static_cast<std::size_t>(
            std::lower_bound(cumulative.begin(), cumulative.end(), target) - cumulative.begin());
        if (p >= pop.size()) p = pop.size() - 1;
    }
    return picks;
}

inline std::vector<Chromosome> roulette_select(const std::vector<Chromosome>& pop,
                                               std::size_t count, std::mt19937_64& rng) {
    std::vector<Chromosome> out;
    out.reserve(count);
    for (std::size_t idx : roulette_indices(pop, count, rng)) out.push_back(pop[idx]);
    return out;
}

/// Perturbs genes_mutated distinct genes by +/- mutation_rate times their
/// current value (independent fair coin per gene), clamping each mutated
/// gene back into its bound.
inline Chromosome mutate(const Chromosome& parent, const ScenarioConfig& cfg,
                         std::mt19937_64& rng) {
    Chromosome child{parent.genes, std::nullopt};
    const std::size_t n = child.genes.size();
    const std::size_t m = std::min<std::size_t>(cfg.ga.genes_mutated, n);

    // Partial Fisher-Yates to pick m distinct gene indices.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < m; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, n - 1);
        std::swap(order[k], order[pick(rng)]);
    }

    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t g = order[k];
        const double sign = coin(rng) == 0 ? 1.0 : -1.0;
        double v = child.genes[g] + sign * cfg.ga.mutation_rate * child.genes[g];
        const bool is_height = (g % 3) == 2;
        const double lo = is_height ? cfg.h_min : 0.0;
        const double hi = is_height ? cfg.h_max : cfg.area_side;
        child.genes[g] = std::clamp(v, lo, hi);
    }
    return child;
}

/// Full generation loop. Returns the best chromosome ever seen, its decoded
/// positions and association, and the per-generation best/mean fitness.
inline Result run(const std::vector<Tsbs>& tsbss, const FadingTable& fading,
                  const ScenarioConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 init_rng(rng::splitmix64(seed ^ 0x1A2B3C4D5E6F7081ULL));
    std::mt19937_64 select_rng(rng::splitmix64(seed ^ 0x2B3C4D5E6F708192ULL));
    std::mt19937_64 mutate_rng(rng::splitmix64(seed ^ 0x3C4D5E6F708192A3ULL));

    std::vector<Chromosome> pop = init_population(cfg, init_rng);
    auto evaluate_all = [&](std::vector<Chromosome>& p) {
        for (auto& c : p)
            if (!c.fitness) c.fitness = evaluate(c, tsbss, fading, cfg);
    };
    evaluate_all(pop);

    auto gen_stats = [&](const std::vector<Chromosome>& p) {
        GenStats s{*p[0].fitness, 0.0};
        for (const auto& c : p) {
            s.best = std::max(s.best, *c.fitness);
            s.mean += *c.fitness;
        }
        s.mean /= static_cast<double>(p.size());
        return s;
    };

    Result res;
    res.history.push_back(gen_stats(pop));
    double best_so_far = res.history.back().best;
    int stall = 0;
    int generation = 1;

    while (generation < cfg.ga.max_generations && stall < cfg.ga.stall_generations) {
        std::vector<Chromosome> next = select_elites(pop, cfg.ga);
        const std::size_t fill = pop.size() - next.size();
        for (Chromosome& parent : roulette_select(pop, fill, select_rng))
            next.push_back(mutate(parent, cfg, mutate_rng));
        pop = std::move(next);
        evaluate_all(pop);
        ++generation;

        const GenStats s = gen_stats(pop);
        res.history.push_back(s);
        if (s.best == best_so_far) {
            ++stall;
        } else {
            stall = 0;
            best_so_far = s.best;
        }
    }

    std::size_t best_idx = 0;
    for (std::size_t e = 1; e < pop.size(); ++e)
        if (*pop[e].fitness > *pop[best_idx].fitness) best_idx = e;
    res.best = pop[best_idx];
    res.fitness = *res.best.fitness;
    res.uavs = decode(res.best);
    if (!tsbss.empty()) {
        const LinkTable tbl = build_link_table(tsbss, res.uavs, cfg, fading);
        res.assoc = associate(tsbss, res.uavs, tbl, cfg);
    }
    return res;
}

} // namespace uavnet::ga
