#include "deltabox/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "deltabox/eigenfunction.hpp"
#include "deltabox/errors.hpp"
#include "deltabox/factorize.hpp"
#include "deltabox/grid.hpp"
#include "deltabox/quantize.hpp"

namespace deltabox::verify {

namespace {

constexpr double kRootResidualTol = 1e-9;
constexpr double kJumpTol = 1e-9;
constexpr double kLadderJumpTol = 1e-9;
constexpr double kRiccatiTol = 1e-9;
constexpr double kAnnihilationTol = 1e-6;
constexpr double kRootWaveTol = 1e-10;
constexpr double kGramTol = 1e-8;
constexpr double kSchrodingerTol = 1e-8;

// Riccati sample points closer than this (in |sin|) to a ladder pole are skipped.
constexpr double kPoleExclusion = 1e-3;

Check make_check(std::string name, double measured, double tolerance, std::string detail) {
    const bool ok = std::isfinite(measured) && measured <= tolerance;
    return Check{std::move(name), ok, measured, tolerance, std::move(detail)};
}

factorize::RootFunction unchecked_root(const SystemConfig& config, const PiecewiseWave& wave) {
    const double k = wave.k();
    return factorize::RootFunction(k, config.box_length(),
                                   config.box_length() - std::acos(-1.0) / k,
                                   config.delta_position(), wave.left_amplitude(),
                                   wave.right_amplitude());
}

GridFunction operator_grid(const SystemConfig& config, std::size_t n,
                           const factorize::RootFunction& xi) {
    for (std::size_t m = n;; ++m) {
        auto g = GridFunction::sample_midpoints([&](double x) { return xi(x); }, 0.0,
                                                config.box_length(), m);
        try {
            fd::split_at(g, config.delta_position());
            return g;
        } catch (const DomainError&) {
        }
    }
}

std::string level_range(const Spectrum& s) {
    return "levels 1-" + std::to_string(s.size());
}

}  // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report run(const Spectrum& input, const Options& options) {
    Spectrum spectrum = input;
    const SystemConfig& config = spectrum.config;
    if (options.inject_k && !spectrum.levels.empty())
        spectrum.levels.front() = make_level(config, 1, *options.inject_k);

    const double a = config.box_length();
    const double pa = config.delta_position();
    const double g = config.coupling();
    const std::string range = level_range(spectrum);

    std::vector<PiecewiseWave> waves;
    for (const auto& l : spectrum.levels) waves.push_back(eigenfunction::make_wave(config, l.k));

    Report report;

    double root_res = 0.0;
    for (const auto& l : spectrum.levels)
        root_res = std::max(root_res, quantize::scaled_residual(config, l.k));
    report.checks.push_back(make_check("quantization_residual", root_res, kRootResidualTol,
                                       range + "; |F(k)| / (1 + k a)"));

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < spectrum.size(); ++i)
        min_gap = std::min(min_gap, spectrum[i].energy - spectrum[i - 1].energy);
    {
        Check c{"monotonic_energies", spectrum.size() < 2 || min_gap > 0.0,
                spectrum.size() < 2 ? 0.0 : min_gap, 0.0,
                "smallest E_{n+1} - E_n; must be > 0"};
        report.checks.push_back(c);
    }

    double jump_res = 0.0;
    for (const auto& w : waves) {
        const double gpsi = g * w.value_at_joint();
        jump_res = std::max(jump_res, std::abs(w.derivative_jump() - gpsi) / (1.0 + std::abs(gpsi)));
    }
    report.checks.push_back(make_check("derivative_jump", jump_res, kJumpTol,
                                       range + "; |jump - g psi(pa)| / (1 + |g psi(pa)|)"));

    double ladder_res = 0.0;
    int singular = 0;
    for (const auto& l : spectrum.levels) {
        factorize::LadderFunction f(config.hbar() * l.k, l.k, a, pa);
        if (f.joint_is_singular()) {
            ++singular;
            ladder_res = std::max(ladder_res, quantize::scaled_residual(config, l.k));
            continue;
        }
        const double expected = config.ladder_jump();
        ladder_res = std::max(ladder_res, std::abs(f.jump() - expected) /
                                              std::max(expected, config.hbar() * l.k));
    }
    report.checks.push_back(make_check(
        "ladder_jump", ladder_res, kLadderJumpTol,
        range + "; relative |f(pa+) - f(pa-) - 2 m lambda / hbar|; " +
            std::to_string(singular) + " singular joint(s) checked via F(k)"));

    double riccati = 0.0;
    int riccati_used = 0;
    for (const auto& l : spectrum.levels) {
        factorize::LadderFunction f(config.hbar() * l.k, l.k, a, pa);
        const int half = options.riccati_points / 2;
        auto probe = [&](double lo, double hi) {
            for (int i = 0; i < half; ++i) {
                const double x = lo + (i + 0.5) * (hi - lo) / half;
                if (std::abs(std::sin(f.argument(x))) < kPoleExclusion) continue;
                riccati = std::max(riccati,
                                   std::abs(factorize::riccati_residual(f, x, config, l.energy)) /
                                       l.energy);
                ++riccati_used;
            }
        };
        probe(0.0, pa);
        probe(pa, a);
    }
    report.checks.push_back(make_check(
        "riccati_identity", riccati, kRiccatiTol,
        std::to_string(riccati_used) + " points; |f^2/2m + hbar f'/2m + E| / E"));

    double annihilation = 0.0;
    double root_vs_wave = 0.0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const auto& l = spectrum[i];
        const auto xi = unchecked_root(config, waves[i]);
        const auto grid = operator_grid(config, options.operator_grid, xi);
        factorize::LadderFunction f(config.hbar() * l.k, l.k, a, pa);
        const auto out = factorize::apply_annihilation(f, grid, config);
        annihilation = std::max(annihilation, out.l2_norm() / grid.l2_norm());
        for (std::size_t j = 0; j < grid.size(); ++j)
            root_vs_wave = std::max(root_vs_wave, std::abs(grid[j] - waves[i](grid.x(j))));
    }
    report.checks.push_back(make_check("annihilation", annihilation, kAnnihilationTol,
                                       range + "; ||a_n xi_n|| / ||xi_n|| on " +
                                           std::to_string(options.operator_grid) + " points"));
    report.checks.push_back(make_check("root_function_equals_wave", root_vs_wave, kRootWaveTol,
                                       range + "; sup |xi_n - psi_n|"));

    double gram = 0.0;
    for (std::size_t i = 0; i < waves.size(); ++i)
        for (std::size_t j = i; j < waves.size(); ++j) {
            const double v =
                eigenfunction::inner_product(waves[i], waves[j], options.quadrature_panels);
            gram = std::max(gram, std::abs(v - (i == j ? 1.0 : 0.0)));
        }
    report.checks.push_back(
        make_check("orthonormality", gram, kGramTol, range + "; max |G_ij - delta_ij|"));

    double node_dev = 0.0;
    for (std::size_t i = 0; i < waves.size(); ++i)
        node_dev = std::max(node_dev, std::abs(eigenfunction::count_interior_nodes(waves[i]) -
                                               static_cast<double>(i)));
    report.checks.push_back(
        make_check("node_count", node_dev, 0.0, range + "; |nodes - (n - 1)|"));

    double schrod = 0.0;
    for (std::size_t i = 0; i < waves.size(); ++i) {
        const double e = spectrum[i].energy;
        for (int j = 1; j <= 100; ++j) {
            const double x = a * j / 101.0;
            if (x == pa) continue;
            schrod = std::max(schrod, std::abs(eigenfunction::schrodinger_residual(
                                          waves[i], config, e, x)) / std::abs(e));
        }
    }
    report.checks.push_back(make_check("schrodinger_residual", schrod, kSchrodingerTol,
                                       range + "; 100 points; |H psi - E psi| / E"));
    return report;
}

}  // namespace deltabox::verify
