#include <doctest.h>

#include <cmath>
#include <random>

#include "deltabox/config.hpp"
#include "deltabox/errors.hpp"

using namespace deltabox;

TEST_CASE("make_config exposes the coupling g = 2 m lambda / hbar^2") {
    const auto fig1 = make_config(1.0, 1.0, 3.0, 4.0, 0.5);
    CHECK(fig1.coupling() == 8.0);
    CHECK(fig1.delta_position() == 1.5);
    CHECK(fig1.ladder_jump() == 8.0);

    const auto plain = make_config(1.0, 1.0, 1.0, 0.0, 0.5);
    CHECK(plain.coupling() == 0.0);
}

TEST_CASE("from_coupling inverts the lambda relation") {
    const auto c = SystemConfig::from_coupling(3.0, 0.5, 8.0, 2.0, 0.5);
    CHECK(c.lambda() == doctest::Approx(8.0 * 4.0 / 1.0));
    CHECK(c.coupling() == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("invalid parameters are rejected with the violated constraint") {
    CHECK_THROWS_AS(make_config(1.0, 1.0, 1.0, -1.0, 0.5), AttractiveCouplingUnsupported);
    CHECK_THROWS_AS(SystemConfig::from_coupling(1.0, 0.5, -2.0), AttractiveCouplingUnsupported);
    CHECK_THROWS_WITH_AS(make_config(0.0, 1.0, 1.0, 1.0, 0.5), "hbar must be finite and > 0",
                         RangeError);
    CHECK_THROWS_WITH_AS(make_config(1.0, -1.0, 1.0, 1.0, 0.5), "mass must be finite and > 0",
                         RangeError);
    CHECK_THROWS_AS(make_config(1.0, 1.0, 0.0, 1.0, 0.5), RangeError);
    CHECK_THROWS_AS(make_config(1.0, 1.0, 1.0, 1.0, 0.0), RangeError);
    CHECK_THROWS_AS(make_config(1.0, 1.0, 1.0, 1.0, 1.0), RangeError);
    CHECK_THROWS_AS(make_config(1.0, 1.0, 1.0, NAN, 0.5), RangeError);
}

TEST_CASE("energy_of and k_of are mutual inverses") {
    std::mt19937_64 rng(20261014);
    std::uniform_real_distribution<double> unit(0.1, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = make_config(unit(rng), unit(rng), unit(rng), unit(rng), 0.37);
        const double k = unit(rng);
        CHECK(std::abs(c.k_of(c.energy_of(k)) - k) <= 1e-14 * k);
        const double e = unit(rng);
        CHECK(std::abs(c.energy_of(c.k_of(e)) - e) <= 1e-14 * e);
    }
    CHECK_THROWS_AS(make_config(1, 1, 1, 1, 0.5).k_of(-1.0), RangeError);
}

TEST_CASE("g is linear in lambda") {
    for (double lambda : {0.125, 1.0, 3.3, 17.0}) {
        const auto one = make_config(1.3, 0.7, 2.0, lambda, 0.4);
        const auto two = make_config(1.3, 0.7, 2.0, 2.0 * lambda, 0.4);
        CHECK(two.coupling() == 2.0 * one.coupling());
    }
}

TEST_CASE("levels carry E = hbar^2 k^2 / 2m") {
    const auto c = make_config(2.0, 3.0, 1.0, 0.0, 0.5);
    const auto l = make_level(c, 1, 1.5);
    CHECK(l.energy == 4.0 * 2.25 / 6.0);
    CHECK_THROWS_AS(make_level(c, 0, 1.0), RangeError);
    CHECK_THROWS_AS(make_level(c, 1, 0.0), RangeError);

    const auto s = make_spectrum(c, {1.0, 2.0, 2.0});
    CHECK(s.levels[2].n == 3);
    CHECK_FALSE(s.is_strictly_increasing());
    CHECK(s.is_nondecreasing());
    CHECK(s.level(2).k == 2.0);
    CHECK_THROWS_AS(s.level(4), RangeError);
}
