#include <doctest.h>

#include <cmath>
#include <random>

#include "harborlink/channel.hpp"
#include "harborlink/link_budget.hpp"
#include "oracles.hpp"

using namespace harborlink::linkbudget;

TEST_CASE("fspl_linear") {
    const double lam = 0.0516883;
    SUBCASE("unit loss at d = lambda / 4 pi") {
        // The 1 m guard forces a wavelength where that distance is legal.
        const double big_lambda = 4.0 * oracle::kPi * 2.0;
        CHECK(fspl_linear(2.0, big_lambda) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("square law") {
        CHECK(fspl_linear(200.0, lam) / fspl_linear(100.0, lam) ==
              doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("5.8 GHz at 100 m") {
        CHECK(fspl_linear(100.0, lam) == doctest::Approx(5.91e8).epsilon(1e-3));
    }
}

TEST_CASE("received_power") {
    LinkBudgetParams p;
    SUBCASE("both algebraic forms agree on random draws") {
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> upow(0.01, 100.0);
        std::uniform_real_distribution<double> ugain(0.1, 10.0);
        std::uniform_real_distribution<double> ulam(0.001, 1.0);
        std::uniform_real_distribution<double> ud(1.0, 10000.0);
        for (int i = 0; i < 1000; ++i) {
            LinkBudgetParams q;
            q.tx_power_w = upow(rng);
            q.tx_gain = ugain(rng);
            q.rx_gain = ugain(rng);
            q.wavelength_m = ulam(rng);
            const double d = ud(rng);
            const double by_fspl = received_power(q, d);
            const double ratio = q.wavelength_m / (4.0 * oracle::kPi * d);
            const double direct = eirp(q) * q.rx_gain * ratio * ratio;
            CHECK(by_fspl == doctest::Approx(direct).epsilon(1e-12));
        }
    }
    SUBCASE("quadrupling distance divides power by 16") {
        CHECK(received_power(p, 400.0) * 16.0 ==
              doctest::Approx(received_power(p, 100.0)).epsilon(1e-12));
    }
    SUBCASE("45 dBm at 5.8 GHz over 100 m") {
        p.tx_power_w = 31.6;
        CHECK(received_power(p, 100.0) == doctest::Approx(5.35e-8).epsilon(1e-3));
    }
}

TEST_CASE("analytic_rate") {
    SUBCASE("R(2d) = R(d) / 4 on random draws") {
        std::mt19937_64 rng(47);
        std::uniform_real_distribution<double> upow(0.01, 100.0);
        std::uniform_real_distribution<double> ulam(0.001, 1.0);
        std::uniform_real_distribution<double> ud(1.0, 5000.0);
        std::uniform_real_distribution<double> ue(1.0, 100.0);
        for (int i = 0; i < 100; ++i) {
            LinkBudgetParams q;
            q.tx_power_w = upow(rng);
            q.wavelength_m = ulam(rng);
            q.ebn0 = ue(rng);
            const double d = ud(rng);
            CHECK(analytic_rate(q, 2.0 * d) ==
                  doctest::Approx(analytic_rate(q, d) / 4.0).epsilon(1e-12));
        }
    }
    SUBCASE("linear in transmit power") {
        LinkBudgetParams p;
        const double base = analytic_rate(p, 500.0);
        p.tx_power_w *= 3.0;
        CHECK(analytic_rate(p, 500.0) == doctest::Approx(3.0 * base).epsilon(1e-12));
    }
    SUBCASE("strictly decreasing and convex in distance") {
        LinkBudgetParams p;
        double prev = analytic_rate(p, 50.0);
        for (double d = 100.0; d <= 5000.0; d += 50.0) {
            const double cur = analytic_rate(p, d);
            CHECK(cur < prev);
            prev = cur;
        }
        for (double d = 100.0; d <= 4000.0; d += 100.0) {
            const double mid = analytic_rate(p, d + 50.0);
            CHECK(analytic_rate(p, d) + analytic_rate(p, d + 100.0) >= 2.0 * mid);
        }
    }
}

TEST_CASE("Eb/N0 identity holds through the chain") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> upow(0.01, 100.0);
    std::uniform_real_distribution<double> ulam(0.001, 1.0);
    std::uniform_real_distribution<double> ud(1.0, 5000.0);
    std::uniform_real_distribution<double> ue(1.0, 100.0);
    for (int i = 0; i < 100; ++i) {
        LinkBudgetParams p;
        p.tx_power_w = upow(rng);
        p.wavelength_m = ulam(rng);
        p.ebn0 = ue(rng);
        const LinkBudgetRow row = evaluate(p, ud(rng));
        CHECK(row.rx_over_n0 / row.rate_bps == doctest::Approx(p.ebn0).epsilon(1e-12));
    }
}

TEST_CASE("link budget agrees with the channel module at 500 m") {
    // With zero additional loss, zero-dBi antennas and matched noise, the
    // channel SNR at 500 m equals R * (Eb/N0) / B when the budget demands
    // exactly that Eb/N0.
    harborlink::channel::ChannelParams ch;
    ch.extra_loss_los_db = 0.0;
    ch.noise_figure_db = 0.0;

    LinkBudgetParams lb;
    lb.tx_power_w = std::pow(10.0, (ch.bs_tx_power_dbm - 30.0) / 10.0);
    lb.wavelength_m = ch.propagation_speed / ch.carrier_frequency_hz;
    lb.bandwidth_hz = ch.bandwidth_hz;
    // -174 dBm/Hz thermal density corresponds to kT at this temperature.
    lb.temperature_k = std::pow(10.0, (-174.0 - 30.0) / 10.0) / lb.boltzmann;

    harborlink::channel::LinkGain g;
    g.path_loss_db = harborlink::channel::path_loss_db(ch, 500.0, harborlink::geometry::LosState::Los);
    g.gain_linear = harborlink::channel::db_to_linear(-g.path_loss_db);
    const double snr = harborlink::channel::snr_siso(ch, g).snr_linear;

    lb.ebn0 = snr; // demand the SNR the channel produces
    const double r = analytic_rate(lb, 500.0);
    CHECK(r * lb.ebn0 / lb.bandwidth_hz == doctest::Approx(snr).epsilon(1e-6));
}
