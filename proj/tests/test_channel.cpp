#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "uavnet/channel.hpp"
#include "uavnet/rng.hpp"
#include "uavnet/scenario.hpp"

using namespace uavnet;

TEST_CASE("horizontal distance ignores height") {
    CHECK(horizontal_distance({0, 0}, {3, 4, 600}) == Catch::Approx(5.0));
    CHECK(horizontal_distance({2, 2}, {2, 2, 300}) == 0.0);
    CHECK(horizontal_distance({1, 1}, {4, 5, 600}) == Catch::Approx(5.0));
}

TEST_CASE("elevation angle") {
    CHECK(elevation_angle_deg(100.0, 100.0) == Catch::Approx(45.0));
    CHECK(elevation_angle_deg(0.0, 300.0) == 90.0);
    const double expected = std::atan2(100.0, 173.205) * 180.0 / std::numbers::pi;
    CHECK(elevation_angle_deg(173.205, 100.0) == Catch::Approx(expected).epsilon(1e-12));
    CHECK(elevation_angle_deg(173.205, 100.0) == Catch::Approx(30.0).margin(1e-3));
    CHECK_THROWS_AS(elevation_angle_deg(10.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(elevation_angle_deg(10.0, -5.0), std::invalid_argument);
}

TEST_CASE("LoS probability") {
    const double alpha = 9.61, beta = 0.16;
    // exponent vanishes at theta == alpha
    CHECK(los_probability(alpha, alpha, beta) == Catch::Approx(1.0 / (1.0 + alpha)).epsilon(1e-12));
    const double at90 = 1.0 / (1.0 + alpha * std::exp(-beta * (90.0 - alpha)));
    CHECK(los_probability(90.0, alpha, beta) == Catch::Approx(at90).epsilon(1e-12));
    CHECK(los_probability(90.0, alpha, beta) == Catch::Approx(0.999975).margin(1e-5));
    for (double theta : {10.0, 50.0, 90.0})
        CHECK(los_probability(theta, alpha, 0.0) == Catch::Approx(1.0 / (1.0 + alpha)));
}

TEST_CASE("path loss") {
    ScenarioConfig cfg;
    cfg.xi_los_db = 0.0;
    const double wavelength = kSpeedOfLight / cfg.f_carrier;
    const double fspl500 = 20.0 * std::log10(4.0 * std::numbers::pi * 500.0 / wavelength);
    CHECK(path_loss_db(500.0, 1.0, cfg) == Catch::Approx(fspl500).epsilon(1e-12));
    CHECK(path_loss_db(500.0, 1.0, cfg) == Catch::Approx(92.45).margin(0.01));

    ScenarioConfig table = {};
    // pure LoS collapses to FSPL plus the LoS excess
    CHECK(path_loss_db(500.0, 1.0, table) ==
          Catch::Approx(fspl500 + table.xi_los_db).epsilon(1e-12));
    // linear mixture of the excess terms
    ScenarioConfig mix = {};
    mix.xi_los_db = 1.0;
    mix.xi_nlos_db = 20.0;
    CHECK(path_loss_db(500.0, 0.5, mix) == Catch::Approx(fspl500 + 10.5).epsilon(1e-12));

    CHECK_THROWS_AS(path_loss_db(0.0, 1.0, cfg), std::invalid_argument);

    // strictly increasing in distance at fixed elevation mix
    double prev = 0.0;
    for (double s = 100.0; s < 6000.0; s += 250.0) {
        const double y = path_loss_db(s, 0.4, cfg);
        CHECK(y > prev);
        prev = y;
    }
}

TEST_CASE("fading gains have unit mean and concentrate for large shape") {
    ScenarioConfig cfg;
    std::mt19937_64 rng_state(1234);
    for (double m : {1.0, 4.0}) {
        double total = 0.0;
        const int n = 200000;
        for (int k = 0; k < n; ++k) total += fading_power_gain(m, rng_state);
        CHECK(total / n == Catch::Approx(1.0).margin(0.01));
    }
    // p(|zeta| < 0.01 dB) for shape 1e6 is about 0.979
    int inside = 0;
    const int n = 20000;
    for (int k = 0; k < n; ++k) {
        const double zeta = linear_to_db(fading_power_gain(1e6, rng_state));
        inside += std::abs(zeta) < 0.01;
    }
    CHECK(static_cast<double>(inside) / n > 0.95);

    // pure LoS mixing uses only the LoS draw
    auto table_rng = rng::substream(3, 0, rng::Stream::fading);
    const FadingTable tbl = FadingTable::sample(2, 2, cfg, table_rng);
    CHECK(tbl.mix_db(1, 0, 1.0) == tbl.zeta_los_db[tbl.u_count * 1 + 0]);
    CHECK(tbl.mix_db(1, 0, 0.0) == tbl.zeta_nlos_db[tbl.u_count * 1 + 0]);
}

TEST_CASE("dB conversions round-trip") {
    for (double v : {-140.0, -50.0, -3.0, 0.0, 12.5, 90.0})
        CHECK(linear_to_db(db_to_linear(v)) == Catch::Approx(v).margin(1e-9));
    for (double w : {1e-16, 1e-9, 0.5, 1.3})
        CHECK(db_to_linear(linear_to_db(w)) == Catch::Approx(w).epsilon(1e-9));
}

TEST_CASE("optimal power") {
    ScenarioConfig cfg; // psi_min 0, psi_max 1.3
    SECTION("cap binds") {
        cfg.i_th = 2.0;
        const auto p = optimal_power(1.0, cfg);
        CHECK(p.watts == 1.3);
        CHECK(p.feasible);
    }
    SECTION("floor violated") {
        cfg.i_th = 0.5;
        cfg.psi_min = 0.6;
        const auto p = optimal_power(1.0, cfg);
        CHECK(p.watts == 0.5);
        CHECK(!p.feasible);
    }
    SECTION("threshold binds below the cap") {
        const auto p = optimal_power(1e-14, cfg);
        CHECK(p.watts == Catch::Approx(1.1943).epsilon(1e-12));
        CHECK(p.feasible);
    }
}

TEST_CASE("link table: single UAV has no interference") {
    ScenarioConfig cfg;
    cfg.num_uavs = 1;
    auto deploy_stream = rng::substream(21, 0, rng::Stream::tsbs_deploy);
    const auto tsbss = deploy_tsbss(cfg, deploy_stream);
    REQUIRE(!tsbss.empty());
    const std::vector<Uav> uavs = {{0, {2000.0, 2000.0, 500.0}}};
    auto fade_stream = rng::substream(21, 0, rng::Stream::fading);
    const LinkTable tbl = build_link_table(tsbss, uavs, cfg, fade_stream);
    for (int i = 0; i < tbl.t_count; ++i) {
        const std::size_t p = tbl.idx(i, 0);
        if (!tbl.tx_feasible[p]) continue;
        CHECK(tbl.sinr[p] == Catch::Approx(tbl.rx_power[p] / tbl.noise_w).epsilon(1e-12));
    }
    // SINR is the plain power ratio
    CHECK(1e-12 / std::pow(10.0, -12.5) == Catch::Approx(3.16228).margin(1e-4));
}

TEST_CASE("link table invariants at full scale") {
    ScenarioConfig cfg;
    auto deploy_stream = rng::substream(22, 0, rng::Stream::tsbs_deploy);
    const auto tsbss = deploy_tsbss(cfg, deploy_stream);
    auto uav_stream = rng::substream(22, 0, rng::Stream::uav_init);
    const auto uavs = init_uavs(cfg, uav_stream);
    auto fade_stream = rng::substream(22, 0, rng::Stream::fading);
    const LinkTable tbl = build_link_table(tsbss, uavs, cfg, fade_stream);

    for (int i = 0; i < tbl.t_count; ++i)
        for (int j = 0; j < tbl.u_count; ++j) {
            const std::size_t p = tbl.idx(i, j);
            CHECK(tbl.p_los[p] >= 0.0);
            CHECK(tbl.p_los[p] <= 1.0);
            CHECK(tbl.slant_dist[p] >= uavs[j].pos.h);
            CHECK(tbl.elevation_deg[p] > 0.0);
            CHECK(tbl.elevation_deg[p] <= 90.0);
            if (tbl.tx_feasible[p]) {
                CHECK(tbl.tx_power[p] >= cfg.psi_min);
                CHECK(tbl.tx_power[p] <= cfg.psi_max);
                CHECK(tbl.gain[p] * tbl.tx_power[p] <= cfg.i_th * (1.0 + 1e-12));
                // round-trip of the bandwidth equation
                const double r = tbl.bandwidth_req[p] * std::log2(1.0 + tbl.sinr[p]);
                CHECK(r == Catch::Approx(tsbss[i].demand_bps).epsilon(1e-9));
            } else {
                CHECK(tbl.sinr[p] == 0.0);
            }
        }
}

TEST_CASE("SINR weakly decreases as interference grows") {
    const double rx = 1e-12, noise = 1e-13;
    double prev = rx / noise;
    for (double interference = 0.0; interference < 1e-12; interference += 1e-13) {
        const double sinr = rx / (noise + interference);
        CHECK(sinr <= prev);
        prev = sinr;
    }
}

TEST_CASE("required bandwidth at unit SINR equals the demand") {
    CHECK(20e6 / std::log2(1.0 + 1.0) == 20e6);
}
