#include <doctest.h>

#include <cmath>
#include <random>

#include "harborlink/energy.hpp"
#include "oracles.hpp"

using namespace harborlink::energy;

TEST_CASE("parameter consistency") {
    EnergyParams p;
    CHECK_NOTHROW(p.validate());
    CHECK((p.frame_weight_kg + p.payload_weight_kg) * p.gravity ==
          doctest::Approx(p.thrust_n).epsilon(1e-9));
    p.thrust_n = 30.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("comm_energy") {
    const EnergyParams p;
    CHECK(comm_energy(p, 1, 10.0) == doctest::Approx(0.416).epsilon(1e-12));
    CHECK(comm_energy(p, 0, 10.0) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(comm_energy(p, 5, 0.0) == 0.0);
    CHECK_THROWS_AS(comm_energy(p, -1, 1.0), std::invalid_argument);
}

TEST_CASE("hover_power") {
    EnergyParams p;
    CHECK(hover_power(p) == doctest::Approx(724.1).epsilon(0.5 / 724.1));

    SUBCASE("thrust exponent law") {
        EnergyParams doubled = p;
        doubled.thrust_n *= 2.0;
        doubled.payload_weight_kg = doubled.thrust_n / doubled.gravity - doubled.frame_weight_kg;
        CHECK(hover_power(doubled) / hover_power(p) ==
              doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-12));
    }
    SUBCASE("power scales inversely with rotor radius") {
        EnergyParams wide = p;
        wide.rotor_radius_m *= 2.0;
        CHECK(hover_power(wide) == doctest::Approx(hover_power(p) / 2.0).epsilon(1e-12));
        wide.rotor_radius_m = p.rotor_radius_m * 4.0;
        CHECK(hover_power(wide) == doctest::Approx(hover_power(p) / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("hover_energy") {
    const EnergyParams p;
    CHECK(hover_energy(p, 10.0) == doctest::Approx(7241.0).epsilon(1e-3));
    CHECK(hover_energy(p, 0.0) == 0.0);
    CHECK(hover_energy(p, 6.0) == doctest::Approx(2.0 * hover_energy(p, 3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(hover_energy(p, -1.0), std::invalid_argument);
}

TEST_CASE("mobility_powers") {
    const EnergyParams p;
    const double p_hover = hover_power(p);

    SUBCASE("matches the closed-form oracle at the CFMR speed") {
        const MobilityPowers m = mobility_powers(p, 10.0);
        CHECK(m.horizontal_w ==
              doctest::Approx(oracle::horizontal_power_w(p.rotor_count, p.thrust_n, p.air_density,
                                                         p.rotor_radius_m, p.drag_coefficient,
                                                         p.reference_area_m2, 10.0))
                  .epsilon(1e-12));
        // Forward flight at moderate speed is cheaper than hovering; the
        // induced flow no longer has to come from the rotors alone.
        CHECK(m.horizontal_w < p_hover);
    }
    SUBCASE("slow flight approaches the hover power") {
        const MobilityPowers m = mobility_powers(p, 1e-4);
        CHECK(m.horizontal_w == doctest::Approx(p_hover).epsilon(1e-6));
    }
    SUBCASE("ascent and descent book work against thrust") {
        const MobilityPowers m = mobility_powers(p, 10.0);
        CHECK(m.ascend_w == doctest::Approx(p_hover + 343.0).epsilon(1e-9));
        CHECK(m.descend_w == doctest::Approx(381.1).epsilon(1e-3));
    }
    SUBCASE("descent power clamps at zero") {
        EnergyParams fast = p;
        fast.descend_speed_mps = 50.0;
        CHECK(mobility_powers(fast, 10.0).descend_w == 0.0);
    }
}

TEST_CASE("mobility_energy") {
    const EnergyParams p;

    SUBCASE("no motion, no energy") {
        CHECK(mobility_energy(p, 0.0, 0.0, 10.0) == 0.0);
    }
    SUBCASE("level leg at the CFMR speed") {
        const double want = mobility_powers(p, 10.0).horizontal_w * 10.0;
        CHECK(mobility_energy(p, 100.0, 0.0, 10.0) == doctest::Approx(want).epsilon(1e-12));
    }
    SUBCASE("descent costs positive energy") {
        CHECK(mobility_energy(p, 0.0, -50.0, 10.0) == doctest::Approx(1905.4).epsilon(1e-3));
    }
    SUBCASE("additive over same-sign legs") {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> ud(0.0, 400.0);
        for (int i = 0; i < 100; ++i) {
            const double d1 = ud(rng), d2 = ud(rng);
            const double h1 = ud(rng) / 10.0, h2 = ud(rng) / 10.0;
            const double joined = mobility_energy(p, d1 + d2, h1 + h2, 10.0);
            const double split = mobility_energy(p, d1, h1, 10.0) + mobility_energy(p, d2, h2, 10.0);
            CHECK(joined == doctest::Approx(split).epsilon(1e-9));
        }
    }
    SUBCASE("never negative on random legs") {
        std::mt19937_64 rng(67);
        std::uniform_real_distribution<double> ud(0.0, 1000.0);
        std::uniform_real_distribution<double> uh(-120.0, 120.0);
        std::uniform_real_distribution<double> uv(0.5, 40.0);
        for (int i = 0; i < 500; ++i) {
            CHECK(mobility_energy(p, ud(rng), uh(rng), uv(rng)) >= 0.0);
        }
    }
}
