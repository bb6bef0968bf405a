#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>

#include "uavnet/rng.hpp"
#include "uavnet/scenario.hpp"

using namespace uavnet;

TEST_CASE("average TSBS count matches the retention formula") {
    ScenarioConfig cfg; // Table-style defaults: delta 2e-6, d_min 250, side 4000
    const double expected = cfg.delta *
                            std::exp(-cfg.delta * std::numbers::pi * cfg.d_min * cfg.d_min) *
                            cfg.area_side * cfg.area_side;
    CHECK(average_tsbs_count(cfg) == Catch::Approx(expected).epsilon(1e-12));
    CHECK(average_tsbs_count(cfg) == Catch::Approx(21.61).margin(0.005));

    ScenarioConfig no_core = cfg;
    no_core.d_min = 0.0;
    CHECK(average_tsbs_count(no_core) ==
          Catch::Approx(no_core.delta * no_core.area_side * no_core.area_side).epsilon(1e-12));

    ScenarioConfig empty = cfg;
    empty.delta = 0.0;
    CHECK(average_tsbs_count(empty) == 0.0);
}

TEST_CASE("hard-core deployments keep the minimum separation") {
    ScenarioConfig cfg;
    for (int rep = 0; rep < 50; ++rep) {
        auto stream = rng::substream(7, rep, rng::Stream::tsbs_deploy);
        const auto tsbss = deploy_tsbss(cfg, stream);
        for (std::size_t i = 0; i < tsbss.size(); ++i) {
            CHECK(tsbss[i].pos.x >= 0.0);
            CHECK(tsbss[i].pos.x <= cfg.area_side);
            CHECK(tsbss[i].pos.y >= 0.0);
            CHECK(tsbss[i].pos.y <= cfg.area_side);
            for (std::size_t k = i + 1; k < tsbss.size(); ++k)
                REQUIRE(distance(tsbss[i].pos, tsbss[k].pos) >= cfg.d_min);
        }
    }
}

TEST_CASE("deployment demands come from the menu and ids are sequential") {
    ScenarioConfig cfg;
    const std::set<double> menu(cfg.demand_menu.begin(), cfg.demand_menu.end());
    auto stream = rng::substream(11, 0, rng::Stream::tsbs_deploy);
    const auto tsbss = deploy_tsbss(cfg, stream);
    REQUIRE(!tsbss.empty());
    for (std::size_t i = 0; i < tsbss.size(); ++i) {
        CHECK(tsbss[i].id == static_cast<int>(i));
        CHECK(menu.count(tsbss[i].demand_bps) == 1);
    }
}

TEST_CASE("empirical deployment mean tracks the retention formula") {
    ScenarioConfig cfg;
    const int n = 3000;
    double total = 0.0;
    for (int rep = 0; rep < n; ++rep) {
        auto stream = rng::substream(13, rep, rng::Stream::tsbs_deploy);
        total += static_cast<double>(deploy_tsbss(cfg, stream).size());
    }
    const double mean = total / n;
    const double expected = average_tsbs_count(cfg);
    CHECK(std::abs(mean - expected) / expected < 0.03);
}

TEST_CASE("zero intensity yields an empty deployment") {
    ScenarioConfig cfg;
    cfg.delta = 0.0;
    auto stream = rng::substream(1, 0, rng::Stream::tsbs_deploy);
    CHECK(deploy_tsbss(cfg, stream).empty());
}

TEST_CASE("deployments are reproducible from (config, seed)") {
    ScenarioConfig cfg;
    auto a_stream = rng::substream(99, 3, rng::Stream::tsbs_deploy);
    auto b_stream = rng::substream(99, 3, rng::Stream::tsbs_deploy);
    const auto a = deploy_tsbss(cfg, a_stream);
    const auto b = deploy_tsbss(cfg, b_stream);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pos.x == b[i].pos.x);
        CHECK(a[i].pos.y == b[i].pos.y);
        CHECK(a[i].demand_bps == b[i].demand_bps);
    }
}

TEST_CASE("initial UAVs are uniform within bounds") {
    ScenarioConfig cfg;
    auto stream = rng::substream(5, 0, rng::Stream::uav_init);
    const auto uavs = init_uavs(cfg, stream);
    REQUIRE(uavs.size() == 4);
    for (const auto& u : uavs) {
        CHECK(u.pos.x >= 0.0);
        CHECK(u.pos.x <= cfg.area_side);
        CHECK(u.pos.y >= 0.0);
        CHECK(u.pos.y <= cfg.area_side);
        CHECK(u.pos.h >= cfg.h_min);
        CHECK(u.pos.h <= cfg.h_max);
    }

    ScenarioConfig pinned = cfg;
    pinned.h_min = pinned.h_max = 500.0;
    auto pinned_stream = rng::substream(5, 1, rng::Stream::uav_init);
    for (const auto& u : init_uavs(pinned, pinned_stream)) CHECK(u.pos.h == 500.0);

    auto s1 = rng::substream(5, 2, rng::Stream::uav_init);
    auto s2 = rng::substream(5, 2, rng::Stream::uav_init);
    const auto u1 = init_uavs(cfg, s1);
    const auto u2 = init_uavs(cfg, s2);
    for (std::size_t j = 0; j < u1.size(); ++j) {
        CHECK(u1[j].pos.x == u2[j].pos.x);
        CHECK(u1[j].pos.h == u2[j].pos.h);
    }
}
