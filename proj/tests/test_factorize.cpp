#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "deltabox/eigenfunction.hpp"
#include "deltabox/errors.hpp"
#include "deltabox/factorize.hpp"
#include "deltabox/quantize.hpp"

using namespace deltabox;
namespace fz = deltabox::factorize;

namespace {

constexpr double pi = std::numbers::pi;

SystemConfig fig1() { return SystemConfig::from_coupling(3.0, 0.5, 8.0); }

// Smooth random function vanishing to fourth order at both walls.
GridFunction random_test_function(std::mt19937_64& rng, double a, std::size_t n) {
    std::normal_distribution<double> coef(0.0, 1.0);
    double c[5];
    for (double& v : c) v = coef(rng);
    return GridFunction::sample_midpoints(
        [&](double x) {
            const double s = std::sin(pi * x / a);
            double series = 0.0;
            for (int j = 0; j < 5; ++j) series += c[j] * std::cos(j * pi * x / a);
            return s * s * s * s * series;
        },
        0.0, a, n);
}

}  // namespace

TEST_CASE("plain box ladder: b = 0, no jump, Riccati exact at a/2") {
    const auto c = SystemConfig::from_coupling(1.0, 0.3, 0.0);
    const auto f = fz::build_ladder(c, make_level(c, 1, pi));
    CHECK(std::abs(f.shift()) < 1e-15);
    CHECK(std::abs(f.jump()) < 1e-12);
    CHECK(std::abs(fz::riccati_residual(f, 0.5, c, pi * pi / 2.0)) < 1e-12);
    CHECK(f(0.25) == doctest::Approx(pi));
}

TEST_CASE("fig1 ground state jump equals g hbar") {
    const auto c = fig1();
    const auto l = quantize::solve_spectrum(c, 1).level(1);
    const auto f = fz::build_ladder(c, l);
    CHECK(f.shift() == doctest::Approx(3.0 - pi / l.k));
    CHECK(std::abs(f.jump() - 8.0) <= 1e-9 * 8.0);
    CHECK(std::abs(fz::ladder_jump_residual(c, l.k)) <= 1e-8);
    CHECK_FALSE(f.joint_is_singular());
}

TEST_CASE("node state: b = pa and the joint is singular") {
    const auto c = fig1();
    const auto f = fz::build_ladder(c, make_level(c, 2, 2.0 * pi / 3.0));
    CHECK(f.shift() == doctest::Approx(1.5));
    CHECK(f.joint_is_singular());
    CHECK_THROWS_AS(fz::ladder_jump_residual(c, 2.0 * pi / 3.0), PoleError);
}

TEST_CASE("bogus k is rejected") {
    const auto c = fig1();
    const double k1 = quantize::solve_spectrum(c, 1).level(1).k;
    CHECK_THROWS_AS(fz::build_ladder(c, make_level(c, 1, k1 + 1e-3)), NotAnEigenvalue);
    CHECK_THROWS_AS(fz::build_ladder(c, make_level(c, 2, 2.0 * pi / 3.0 + 1e-3)), NotAnEigenvalue);
}

TEST_CASE("ladder residual times sin sin equals F pointwise") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::uniform_real_distribution<double> kk(0.1, 30.0);
    std::uniform_real_distribution<double> gg(0.0, 50.0);
    int compared = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto c = SystemConfig::from_coupling(0.5 + 3.0 * u(rng), u(rng), gg(rng));
        const double k = kk(rng);
        const double a = c.box_length(), p = c.fraction();
        const double s1 = std::sin(p * k * a), s2 = std::sin((p - 1.0) * k * a);
        if (std::abs(s1) < 1e-6 || std::abs(s2) < 1e-6) continue;
        const double fk = quantize::residual(c, k);
        const double lj = fz::ladder_jump_residual(c, k);
        CHECK(lj * s1 * s2 == doctest::Approx(fk).epsilon(1e-9).scale(1.0 + k));
        if (std::abs(fk) > 1e-9 * (1.0 + k)) CHECK((lj * s1 * s2 > 0.0) == (fk > 0.0));
        ++compared;
    }
    CHECK(compared > 1900);
}

TEST_CASE("Riccati identity at random points of random levels") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const auto c = make_config(0.5 + u(rng), 0.5 + u(rng), 1.0 + 2.0 * u(rng), 10.0 * u(rng),
                                   0.1 + 0.8 * u(rng));
        const auto s = quantize::solve_spectrum(c, 5);
        for (const auto& l : s.levels) {
            const auto f = fz::build_ladder(c, l);
            for (int i = 0; i < 100; ++i) {
                const double x = c.box_length() * (0.001 + 0.998 * u(rng));
                if (std::abs(std::sin(f.argument(x))) < 1e-3 || x == c.delta_position()) continue;
                CHECK(std::abs(fz::riccati_residual(f, x, c, l.energy)) <= 1e-9 * l.energy);
            }
        }
    }
    const auto f = fz::build_ladder(fig1(), quantize::solve_spectrum(fig1(), 1).level(1));
    CHECK_THROWS_AS(fz::riccati_residual(f, 1.5, fig1(), 1.0), DomainError);
    CHECK_THROWS_AS(f(0.0), DomainError);
}

TEST_CASE("for n >= 2 the ladder function has poles at the nodes of psi_n") {
    const auto c = SystemConfig::from_coupling(1.0, 0.3, 4.0);
    const auto l = quantize::solve_spectrum(c, 3).level(3);
    const auto f = fz::build_ladder(c, l);
    const auto w = eigenfunction::build_wave(c, l);
    int poles = 0;
    const int n = 100000;
    for (int i = 1; i < n; ++i) {
        const double x0 = (i - 0.5) / n, x1 = (i + 0.5) / n;
        if (x0 < 0.3 && x1 > 0.3) continue;
        if (std::abs(std::remainder(f.argument(x0), pi)) > 0.0 &&
            std::floor(f.argument(x0) / pi) != std::floor(f.argument(x1) / pi))
            ++poles;
    }
    CHECK(poles == eigenfunction::count_interior_nodes(w));
}

TEST_CASE("root function equals the eigenfunction and a annihilates it") {
    const auto cfgs = {fig1(), SystemConfig::from_coupling(2.0, 0.27, 3.0),
                       make_config(1.3, 0.8, 1.7, 6.0, 0.61)};
    for (const auto& c : cfgs) {
        const auto s = quantize::solve_spectrum(c, 5);
        for (const auto& l : s.levels) {
            const auto xi = fz::root_function(c, l);
            const auto psi = eigenfunction::build_wave(c, l);
            double dev = 0.0;
            for (int i = 0; i <= 10000; ++i) {
                const double x = c.box_length() * i / 10000.0;
                dev = std::max(dev, std::abs(xi(x) - psi(x)));
            }
            CHECK(dev <= 1e-10);

            const auto f = fz::build_ladder(c, l);
            const auto g = GridFunction::sample_midpoints([&](double x) { return xi(x); }, 0.0,
                                                          c.box_length(), 10000);
            const auto out = fz::apply_annihilation(f, g, c);
            CHECK(out.l2_norm() / g.l2_norm() <= 1e-6);
        }
    }
}

TEST_CASE("operator grids are validated") {
    const auto c = fig1();
    const auto f = fz::build_ladder(c, quantize::solve_spectrum(c, 1).level(1));
    const auto coarse = GridFunction::sample_midpoints([](double x) { return x; }, 0.0, 3.0, 100);
    CHECK_THROWS_AS(fz::apply_annihilation(f, coarse, c), GridTooCoarse);
    const auto on_joint = GridFunction::sample_midpoints([](double x) { return x; }, 0.0, 3.0, 1001);
    CHECK_THROWS_AS(fz::apply_annihilation(f, on_joint, c), DomainError);
    const auto wall = GridFunction::sample([](double x) { return x; }, 0.0, 3.0 / 2000.0, 2001);
    CHECK_THROWS_AS(fz::apply_creation(f, wall, c), DomainError);
}

TEST_CASE("plain box chain closed form") {
    const auto c = make_config(1.0, 1.0, 1.0, 0.0, 0.5);
    const auto chain = fz::plain_box_chain(c, 3);
    REQUIRE(chain.steps.size() == 3);
    const double expected[] = {pi * pi / 2.0, 2.0 * pi * pi, 4.5 * pi * pi};
    for (int n = 1; n <= 3; ++n) {
        const auto& st = chain.steps[n - 1];
        CHECK(st.n == n);
        CHECK(st.c == n * pi);
        CHECK(st.d == pi);
        CHECK(st.energy == doctest::Approx(expected[n - 1]).epsilon(1e-15));
    }
    const auto three = SystemConfig::from_coupling(3.0, 0.5, 0.0);
    CHECK(fz::plain_box_chain(three, 1).steps[0].d ==
          quantize::weak_coupling_spectrum(three, 1).level(1).k);
    CHECK_THROWS_AS(fz::plain_box_chain(c, 0), RangeError);
}

TEST_CASE("a_n a_n^dag + E_n = a_{n+1}^dag a_{n+1} + E_{n+1} on random functions") {
    const auto c = make_config(0.9, 1.4, 2.0, 0.0, 0.5);
    const auto chain = fz::plain_box_chain(c, 5);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        // Shift the grid off x = a/2 by using an even count.
        const auto phi = random_test_function(rng, 2.0, 20000);
        for (int n = 1; n <= 4; ++n) {
            const auto lo = fz::apply_raised_product(chain.ladder(n), phi, c);
            const auto hi = fz::apply_lowered_product(chain.ladder(n + 1), phi, c);
            const double en = chain.steps[n - 1].energy, en1 = chain.steps[n].energy;
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < phi.size(); ++i) {
                const double lhs = lo[i] + en * phi[i];
                const double rhs = hi[i] + en1 * phi[i];
                num += (lhs - rhs) * (lhs - rhs);
                den += lhs * lhs;
            }
            CHECK(std::sqrt(num / den) <= 1e-6);
        }
    }
}

TEST_CASE("creation chain builds plain box eigenstates") {
    const auto c = SystemConfig::from_coupling(1.0, 0.5, 0.0);
    const auto chain = fz::plain_box_chain(c, 4);
    for (int n = 1; n <= 4; ++n) {
        const auto psi = fz::chain_eigenstate(chain, n, c);
        const auto h = fz::apply_kinetic(psi, c, 0.5);
        double num = 0.0, den = 0.0, overlap = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            const double r = h[i] - chain.steps[n - 1].energy * psi[i];
            num += r * r;
            den += psi[i] * psi[i];
            overlap += psi[i] * std::sqrt(2.0) * std::sin(n * pi * psi.x(i)) * psi.dx();
        }
        CHECK(std::sqrt(num / den) / chain.steps[n - 1].energy <= 1e-6);
        CHECK(std::abs(overlap) > 0.999);
    }
}

TEST_CASE("a_1^dag on the second root function gives psi_2") {
    const auto c = SystemConfig::from_coupling(1.0, 0.5, 0.0);
    const auto chain = fz::plain_box_chain(c, 2);
    const auto xi2 = GridFunction::sample_midpoints(
        [](double x) { return std::pow(std::sin(pi * x), 2); }, 0.0, 1.0, 10000);
    const auto out = fz::apply_creation(chain.ladder(1), xi2, c);
    double dot = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
        dot += out[i] * std::sqrt(2.0) * std::sin(2.0 * pi * out.x(i)) * out.dx();
    CHECK(std::abs(dot) / out.l2_norm() > 0.999);
}
