#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "deltabox/eigenfunction.hpp"
#include "deltabox/errors.hpp"
#include "deltabox/quantize.hpp"

using namespace deltabox;
namespace ef = deltabox::eigenfunction;

namespace {

constexpr double pi = std::numbers::pi;

SystemConfig fig1() { return SystemConfig::from_coupling(3.0, 0.5, 8.0); }

}  // namespace

TEST_CASE("fig1 ground state against frozen high-precision values") {
    const auto c = fig1();
    const auto s = quantize::solve_spectrum(c, 3);
    const auto w = ef::build_wave(c, s.level(1));
    CHECK(w.left_amplitude() == doctest::Approx(0.76528479853789963325).epsilon(1e-11));
    CHECK(w.right_amplitude() == doctest::Approx(-w.left_amplitude()).epsilon(1e-11));
    CHECK(w(1.5) == doctest::Approx(0.31563548614240985014).epsilon(1e-11));
    CHECK(w.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("free box eigenfunction is sqrt(2/a) sin(n pi x / a)") {
    const auto c = SystemConfig::from_coupling(1.0, 0.3, 0.0);
    for (int n = 1; n <= 4; ++n) {
        const auto w = ef::build_wave(c, make_level(c, n, n * pi));
        for (double x : {0.05, 0.3, 0.61, 0.97})
            CHECK(w(x) == doctest::Approx(std::sqrt(2.0) * std::sin(n * pi * x)).epsilon(1e-12));
        CHECK(ef::derivative_jump(w) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("node state of fig1 is the unperturbed sine") {
    const auto c = fig1();
    const auto w = ef::build_wave(c, make_level(c, 2, 2.0 * pi / 3.0));
    CHECK(std::abs(w(1.5)) < 1e-14);
    for (double x : {0.3, 1.0, 2.2, 2.9})
        CHECK(w(x) == doctest::Approx(std::sqrt(2.0 / 3.0) * std::sin(2.0 * pi * x / 3.0)).epsilon(1e-12));
    CHECK(ef::count_interior_nodes(w) == 1);
}

TEST_CASE("walls, continuity, derivative jump and Schrodinger residual on random configs") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::uniform_real_distribution<double> la(0.5, 5.0);
    std::uniform_real_distribution<double> lg(0.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = make_config(0.5 + u(rng), 0.5 + u(rng), la(rng), std::pow(10.0, lg(rng)) - 1.0,
                                   u(rng));
        const auto s = quantize::solve_spectrum(c, 5);
        for (const auto& l : s.levels) {
            const auto w = ef::build_wave(c, l);
            CHECK(w(0.0) == 0.0);
            CHECK(std::abs(w(c.box_length())) < 1e-14);
            CHECK(std::abs(w.continuity_mismatch()) < 1e-12);
            const double scale = 1.0 + std::abs(c.coupling() * w.value_at_joint());
            CHECK(std::abs(ef::jump_condition_residual(w, c)) <= 1e-9 * scale);
            CHECK(w.derivative(1e-9 * c.box_length()) > 0.0);
            CHECK(ef::count_interior_nodes(w) == l.n - 1);
            for (double t : {0.1, 0.37, 0.73, 0.91}) {
                const double x = t * c.box_length();
                if (std::abs(x - c.delta_position()) < 1e-9) continue;
                CHECK(std::abs(ef::schrodinger_residual(w, c, l.energy, x)) <= 1e-8 * l.energy);
            }
        }
    }
}

TEST_CASE("analytic normalization agrees with Simpson quadrature and Gram is identity") {
    const auto c = SystemConfig::from_coupling(2.0, 1.0 / std::sqrt(2.0), 13.0);
    const auto s = quantize::solve_spectrum(c, 6);
    std::vector<PiecewiseWave> ws;
    for (const auto& l : s.levels) ws.push_back(ef::build_wave(c, l));
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j)
            CHECK(std::abs(ef::inner_product(ws[i], ws[j]) - (i == j ? 1.0 : 0.0)) <= 1e-8);
}

TEST_CASE("A = 1 rescaling keeps the shape") {
    const auto c = fig1();
    const auto w = ef::build_wave(c, quantize::solve_spectrum(c, 1).level(1));
    const auto v = ef::with_left_amplitude(w, 1.0);
    CHECK(v.left_amplitude() == 1.0);
    CHECK(v(0.8) / w(0.8) == doctest::Approx(1.0 / w.left_amplitude()));
    CHECK_THROWS_AS(ef::with_left_amplitude(w, 0.0), RangeError);
}

TEST_CASE("bogus wave numbers and bad points are rejected") {
    const auto c = fig1();
    const double k1 = quantize::solve_spectrum(c, 1).level(1).k;
    CHECK_THROWS_AS(ef::build_wave(c, make_level(c, 1, k1 + 1e-3)), NotAnEigenvalue);
    const auto w = ef::make_wave(c, k1);
    CHECK_THROWS_AS(w(-0.1), DomainError);
    CHECK_THROWS_AS(w(3.1), DomainError);
    CHECK_THROWS_AS(ef::schrodinger_residual(w, c, 1.0, 1.5), DomainError);
    const auto other = ef::make_wave(SystemConfig::from_coupling(3.0, 0.4, 8.0), 1.9);
    CHECK_THROWS_AS(ef::inner_product(w, other), DomainError);
}

TEST_CASE("the continuous two-branch function is never identically zero") {
    const auto c = SystemConfig::from_coupling(1.0, 0.3, 5.0);
    for (int i = 1; i <= 4000; ++i) CHECK(ef::has_nontrivial_wave(c, 0.01 * i));
    // Exactly on sub-box fences, including shared ones.
    const auto half = SystemConfig::from_coupling(2.0, 0.5, 5.0);
    for (int j = 1; j <= 12; ++j) {
        CHECK(ef::has_nontrivial_wave(c, j * pi / 0.3));
        CHECK(ef::has_nontrivial_wave(c, j * pi / 0.7));
        CHECK(ef::has_nontrivial_wave(half, j * pi));
    }
    const auto j = ef::joint_amplitudes(fig1(), 2.0 * pi / 3.0);
    CHECK(j.degenerate_joint);
    CHECK(std::abs(j.right) == std::abs(j.left));
}
