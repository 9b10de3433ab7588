#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "harborlink/channel.hpp"
#include "oracles.hpp"

using namespace harborlink::channel;
using harborlink::geometry::Box3;
using harborlink::geometry::LosState;
using harborlink::geometry::Vec3;

namespace {

ChannelParams table_defaults() { return ChannelParams{}; }

} // namespace

TEST_CASE("path_loss_db") {
    ChannelParams p = table_defaults();

    SUBCASE("reference points") {
        p.extra_loss_los_db = 0.0;
        CHECK(path_loss_db(p, 1.0, LosState::Los) == doctest::Approx(47.7163).epsilon(1e-5));
        CHECK(path_loss_db(p, 100.0, LosState::Nlos) ==
              doctest::Approx(47.7163 + 40.0 + 20.0).epsilon(1e-5));
    }
    SUBCASE("doubling the distance adds 20 log10(2)") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> ud(1.0, 5000.0);
        for (int i = 0; i < 100; ++i) {
            const double d = ud(rng);
            CHECK(path_loss_db(p, 2.0 * d, LosState::Los) -
                      path_loss_db(p, d, LosState::Los) ==
                  doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
        }
    }
    SUBCASE("near-field guard") {
        CHECK_THROWS_AS(path_loss_db(p, 0.5, LosState::Los), std::domain_error);
    }
}

TEST_CASE("noise_power_dbm") {
    ChannelParams p = table_defaults();
    CHECK(noise_power_dbm(p) == doctest::Approx(-94.0).epsilon(1e-12));
    p.noise_figure_db = 0.0;
    CHECK(noise_power_dbm(p) == doctest::Approx(-104.0).epsilon(1e-12));
    p.bandwidth_hz = 1.0;
    CHECK(noise_power_dbm(p) == doctest::Approx(-174.0).epsilon(1e-12));
}

TEST_CASE("link_gain") {
    ChannelParams p = table_defaults();
    const Vec3 tx{0, 0, 10};
    const Vec3 rx{100, 0, 10};

    SUBCASE("unobstructed 100 m link at 5.8 GHz") {
        const LinkGain g = link_gain(p, tx, rx, {});
        CHECK(g.los == LosState::Los);
        CHECK(g.path_loss_db == doctest::Approx(88.7163).epsilon(1e-5));
        CHECK(g.gain_linear == doctest::Approx(std::pow(10.0, -g.path_loss_db / 10.0)));
    }
    SUBCASE("blocked link picks up the NLoS loss") {
        const std::vector<Box3> wall{Box3{{50, 0, 0}, 4.0, 40.0, 30.0, 0.0}};
        const LinkGain g = link_gain(p, tx, rx, wall);
        CHECK(g.los == LosState::Nlos);
        CHECK(g.path_loss_db == doctest::Approx(107.7163).epsilon(1e-5));
    }
    SUBCASE("100 dB path loss means 1e-10 gain") {
        CHECK(db_to_linear(-100.0) == doctest::Approx(1e-10).epsilon(1e-12));
    }
}

TEST_CASE("snr_siso") {
    ChannelParams p = table_defaults();

    SUBCASE("dB bookkeeping: 45 dBm through 107.72 dB loss over -94 dBm noise") {
        LinkGain g;
        g.path_loss_db = 107.72;
        g.gain_linear = db_to_linear(-g.path_loss_db);
        g.los = LosState::Nlos;
        const SnrReport r = snr_siso(p, g);
        CHECK(r.snr_db == doctest::Approx(45.0 - 107.72 + 94.0).epsilon(1e-9));
        CHECK(r.rx_power_dbm == doctest::Approx(45.0 - 107.72).epsilon(1e-9));
    }
    SUBCASE("constructed unity SNR") {
        LinkGain g;
        g.gain_linear = db_to_linear(noise_power_dbm(p)) / db_to_linear(p.bs_tx_power_dbm);
        const SnrReport r = snr_siso(p, g);
        CHECK(r.snr_linear == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.snr_db == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("halving the gain costs 3.0103 dB") {
        LinkGain a;
        a.gain_linear = 1e-9;
        LinkGain b;
        b.gain_linear = 0.5e-9;
        CHECK(snr_siso(p, a).snr_db - snr_siso(p, b).snr_db ==
              doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-9));
    }
}

TEST_CASE("rate_siso") {
    SnrReport snr;
    snr.snr_linear = 0.0;
    CHECK(rate_siso(snr) == 0.0);
    snr.snr_linear = 3.0;
    CHECK(rate_siso(snr) == doctest::Approx(2.0).epsilon(1e-12));
    snr.snr_linear = db_to_linear(31.28);
    CHECK(rate_siso(snr) == doctest::Approx(10.39).epsilon(1e-3));
}

TEST_CASE("snr_df picks the bottleneck") {
    ChannelParams p = table_defaults();
    const double noise_lin = db_to_linear(noise_power_dbm(p));
    const double bs_lin = db_to_linear(p.bs_tx_power_dbm);
    const double relay_lin = db_to_linear(p.relay_tx_power_dbm);
    auto gain_for_hop_snr = [&](double snr, double tx_lin) {
        LinkGain g;
        g.gain_linear = snr * noise_lin / tx_lin;
        return g;
    };

    SUBCASE("access-limited: min(10, 1 + 5) = 6") {
        const SnrReport r = snr_df(p, gain_for_hop_snr(10.0, bs_lin),
                                   gain_for_hop_snr(1.0, bs_lin), gain_for_hop_snr(5.0, relay_lin));
        CHECK(r.snr_linear == doctest::Approx(6.0).epsilon(1e-12));
        CHECK(r.components.bs_to_relay == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("backhaul bottleneck: min(2, 1 + 5) = 2") {
        const SnrReport r = snr_df(p, gain_for_hop_snr(2.0, bs_lin), gain_for_hop_snr(1.0, bs_lin),
                                   gain_for_hop_snr(5.0, relay_lin));
        CHECK(r.snr_linear == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("dead relay arm degrades to the direct SNR") {
        const SnrReport r = snr_df(p, gain_for_hop_snr(10.0, bs_lin),
                                   gain_for_hop_snr(1.0, bs_lin), gain_for_hop_snr(0.0, relay_lin));
        CHECK(r.snr_linear == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rate_df") {
    SnrReport snr;
    snr.snr_linear = 3.0;
    CHECK(rate_df(snr) == doctest::Approx(1.0).epsilon(1e-12));
    snr.snr_linear = 0.0;
    CHECK(rate_df(snr) == 0.0);
    snr.snr_linear = 255.0;
    CHECK(rate_df(snr) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("apply_sensitivity") {
    const ChannelParams p = table_defaults();
    CHECK(apply_sensitivity(-100.0, 5.0, p) == 0.0);
    CHECK(apply_sensitivity(-94.5, 5.0, p) == 5.0); // boundary keeps the rate
    CHECK(apply_sensitivity(-60.0, 5.0, p) == 5.0);
}

TEST_CASE("channel chain matches the dB-domain oracle on random draws") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> ud(1.0, 8000.0);
    std::uniform_real_distribution<double> uf(0.4e9, 30e9);
    std::uniform_real_distribution<double> ub(1e5, 1e8);
    std::uniform_real_distribution<double> unf(0.0, 12.0);
    std::uniform_real_distribution<double> up(-10.0, 50.0);
    std::uniform_real_distribution<double> uz(0.0, 25.0);

    for (int i = 0; i < 1000; ++i) {
        ChannelParams p;
        p.carrier_frequency_hz = uf(rng);
        p.bandwidth_hz = ub(rng);
        p.noise_figure_db = unf(rng);
        p.extra_loss_los_db = uz(rng);
        p.extra_loss_nlos_db = p.extra_loss_los_db + uz(rng);
        p.bs_tx_power_dbm = up(rng);
        p.relay_tx_power_dbm = up(rng);
        const double d_br = ud(rng);
        const double d_bv = ud(rng);
        const double d_rv = ud(rng);

        auto gain_at = [&](double d, LosState los) {
            LinkGain g;
            g.los = los;
            g.path_loss_db = path_loss_db(p, d, los);
            g.gain_linear = db_to_linear(-g.path_loss_db);
            return g;
        };
        const LinkGain g_br = gain_at(d_br, LosState::Los);
        const LinkGain g_bv = gain_at(d_bv, LosState::Nlos);
        const LinkGain g_rv = gain_at(d_rv, LosState::Los);

        const double want_br =
            oracle::hop_snr_linear(p.bs_tx_power_dbm, 0.0, p.carrier_frequency_hz, d_br,
                                   p.propagation_speed, p.extra_loss_los_db, p.bandwidth_hz,
                                   p.noise_figure_db);
        const double want_bv =
            oracle::hop_snr_linear(p.bs_tx_power_dbm, 0.0, p.carrier_frequency_hz, d_bv,
                                   p.propagation_speed, p.extra_loss_nlos_db, p.bandwidth_hz,
                                   p.noise_figure_db);
        const double want_rv =
            oracle::hop_snr_linear(p.relay_tx_power_dbm, 0.0, p.carrier_frequency_hz, d_rv,
                                   p.propagation_speed, p.extra_loss_los_db, p.bandwidth_hz,
                                   p.noise_figure_db);

        const SnrReport siso = snr_siso(p, g_bv);
        CHECK(siso.snr_linear == doctest::Approx(want_bv).epsilon(1e-9));
        CHECK(rate_siso(siso) ==
              doctest::Approx(oracle::rate_siso_bpshz(want_bv)).epsilon(1e-9));

        const SnrReport df = snr_df(p, g_br, g_bv, g_rv);
        CHECK(df.snr_linear ==
              doctest::Approx(oracle::snr_df_linear(want_br, want_bv, want_rv)).epsilon(1e-9));
        CHECK(rate_df(df) ==
              doctest::Approx(oracle::rate_df_bpshz(oracle::snr_df_linear(want_br, want_bv,
                                                                          want_rv)))
                  .epsilon(1e-9));
    }
}

TEST_CASE("channel properties") {
    const ChannelParams p = table_defaults();

    SUBCASE("rate strictly decreasing in distance under fixed loss class") {
        double previous = 1e300;
        for (double d = 50.0; d <= 5000.0; d += 50.0) {
            LinkGain g;
            g.path_loss_db = path_loss_db(p, d, LosState::Nlos);
            g.gain_linear = db_to_linear(-g.path_loss_db);
            const double rate = rate_siso(snr_siso(p, g));
            CHECK(rate < previous);
            previous = rate;
        }
    }
    SUBCASE("monotonicity: better gain never hurts the DF rate") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> ug(1e-14, 1e-6);
        for (int i = 0; i < 200; ++i) {
            LinkGain br, bv, rv;
            br.gain_linear = ug(rng);
            bv.gain_linear = ug(rng);
            rv.gain_linear = ug(rng);
            const double base = snr_df(p, br, bv, rv).snr_linear;
            LinkGain better = rv;
            better.gain_linear *= 2.0;
            CHECK(snr_df(p, br, bv, better).snr_linear >= base);
            LinkGain better_br = br;
            better_br.gain_linear *= 2.0;
            CHECK(snr_df(p, better_br, bv, rv).snr_linear >= base);
        }
    }
    SUBCASE("DF at equal gains never beats SISO on the direct link") {
        for (double d = 100.0; d <= 3000.0; d += 100.0) {
            LinkGain g;
            g.path_loss_db = path_loss_db(p, d, LosState::Los);
            g.gain_linear = db_to_linear(-g.path_loss_db);
            const double siso = rate_siso(snr_siso(p, g));
            const double df = rate_df(snr_df(p, g, g, g));
            CHECK(df <= siso + 1e-12);
        }
    }
}
