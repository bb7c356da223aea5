#include "deltabox/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "deltabox/errors.hpp"
#include "deltabox/quantize.hpp"

namespace deltabox::factorize {

namespace {

constexpr double pi = std::numbers::pi;

// Cotangent arguments closer than this to a multiple of pi count as poles.
constexpr double kPoleTolerance = 1e-12;

// Quantization residual accepted for a level whose joint sits on a pole.
constexpr double kSingularJointResidual = 1e-9;

double distance_to_pole(double t) { return std::abs(t - pi * std::round(t / pi)); }

double cot(double t) { return std::cos(t) / std::sin(t); }

void check_operator_grid(const LadderFunction& ladder, const GridFunction& phi) {
    const double a = ladder.box_length();
    if (!(phi.x0() > 0.0) || !(phi.x_last() < a))
        throw DomainError("operator grid must lie strictly inside (0, a)");
    if (phi.dx() > a / 512.0)
        throw GridTooCoarse("operator grid needs dx <= a / 512 (dx = " +
                            std::to_string(phi.dx()) + ")");
}

template <typename Combine>
GridFunction apply_first_order(const LadderFunction& ladder, const GridFunction& phi,
                               const SystemConfig& config, Combine combine) {
    check_operator_grid(ladder, phi);
    const auto dphi = fd::first_derivative_split(phi, ladder.joint());
    const double inv_sqrt_2m = 1.0 / std::sqrt(2.0 * config.mass());
    std::vector<double> out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const double f = ladder(phi.x(i));
        out[i] = combine(config.hbar() * dphi[i], f * phi[i]) * inv_sqrt_2m;
    }
    return phi.with_values(std::move(out));
}

}  // namespace

LadderFunction::LadderFunction(double amplitude, double frequency, double a, double joint)
    : amplitude_(amplitude),
      frequency_(frequency),
      a_(a),
      joint_(joint),
      shift_(a - pi / frequency) {
    if (!(frequency > 0.0)) throw RangeError("LadderFunction: frequency must be > 0");
    if (!(a > 0.0) || !(joint > 0.0 && joint <= a))
        throw RangeError("LadderFunction: need 0 < joint <= a");
}

void LadderFunction::check_domain(double x) const {
    if (!(x > 0.0 && x < a_))
        throw DomainError("ladder function evaluated at x = " + std::to_string(x) +
                          " outside (0, a)");
    if (x == joint_) throw DomainError("ladder function is discontinuous at x = pa");
}

Branch LadderFunction::branch_of(double x) const {
    check_domain(x);
    return x < joint_ ? Branch::left : Branch::right;
}

double LadderFunction::argument(double x) const {
    return branch_of(x) == Branch::left ? frequency_ * x : frequency_ * (x - shift_);
}

double LadderFunction::operator()(double x) const { return amplitude_ * cot(argument(x)); }

double LadderFunction::derivative(double x) const {
    const double s = std::sin(argument(x));
    return -amplitude_ * frequency_ / (s * s);
}

double LadderFunction::left_limit() const noexcept {
    return amplitude_ * cot(frequency_ * joint_);
}

double LadderFunction::right_limit() const noexcept {
    return amplitude_ * cot(frequency_ * (joint_ - shift_));
}

double LadderFunction::jump() const noexcept { return right_limit() - left_limit(); }

bool LadderFunction::joint_is_singular(double tolerance) const noexcept {
    return distance_to_pole(frequency_ * joint_) < tolerance ||
           distance_to_pole(frequency_ * (joint_ - shift_)) < tolerance;
}

LadderFunction build_ladder(const SystemConfig& config, const EigenLevel& level,
                            double tolerance) {
    const double k = level.k;
    LadderFunction ladder(config.hbar() * k, k, config.box_length(), config.delta_position());
    if (ladder.joint_is_singular()) {
        // Both cotangents blow up at pa; fall back to the sine form.
        if (quantize::scaled_residual(config, k) > kSingularJointResidual)
            throw NotAnEigenvalue("k = " + std::to_string(k) +
                                  ": singular joint and nonzero quantization residual");
        return ladder;
    }
    const double expected = config.ladder_jump();
    const double scale = std::max(expected, config.hbar() * k);
    if (!(std::abs(ladder.jump() - expected) <= tolerance * scale))
        throw NotAnEigenvalue("k = " + std::to_string(k) + ": ladder jump " +
                              std::to_string(ladder.jump()) + " != 2 m lambda / hbar = " +
                              std::to_string(expected));
    return ladder;
}

double ladder_jump_residual(const SystemConfig& config, double k) {
    const double t1 = config.fraction() * k * config.box_length();
    const double t2 = (config.fraction() - 1.0) * k * config.box_length();
    if (distance_to_pole(t1) < kPoleTolerance || distance_to_pole(t2) < kPoleTolerance)
        throw PoleError("ladder_jump_residual: cotangent pole at k = " + std::to_string(k));
    return k * (cot(t2) - cot(t1)) - config.coupling();
}

double riccati_residual(const LadderFunction& ladder, double x, const SystemConfig& config,
                        double energy) {
    const double t = ladder.argument(x);
    if (distance_to_pole(t) < kPoleTolerance)
        throw PoleError("riccati_residual: ladder pole at x = " + std::to_string(x));
    const double f = ladder(x);
    const double df = ladder.derivative(x);
    const double two_m = 2.0 * config.mass();
    return f * f / two_m + config.hbar() * df / two_m + energy;
}

GridFunction apply_annihilation(const LadderFunction& ladder, const GridFunction& phi,
                                const SystemConfig& config) {
    return apply_first_order(ladder, phi, config,
                             [](double hd, double fphi) { return hd - fphi; });
}

GridFunction apply_creation(const LadderFunction& ladder, const GridFunction& phi,
                            const SystemConfig& config) {
    return apply_first_order(ladder, phi, config,
                             [](double hd, double fphi) { return hd + fphi; });
}

// With the -i phases restored, a^dag a = -(real a^dag)(real a) and likewise
// for a a^dag.
GridFunction apply_lowered_product(const LadderFunction& ladder, const GridFunction& phi,
                                   const SystemConfig& config) {
    auto out = apply_creation(ladder, apply_annihilation(ladder, phi, config), config);
    for (auto& v : out.mutable_values()) v = -v;
    return out;
}

GridFunction apply_raised_product(const LadderFunction& ladder, const GridFunction& phi,
                                  const SystemConfig& config) {
    auto out = apply_annihilation(ladder, apply_creation(ladder, phi, config), config);
    for (auto& v : out.mutable_values()) v = -v;
    return out;
}

GridFunction apply_kinetic(const GridFunction& phi, const SystemConfig& config,
                           double breakpoint) {
    auto d2 = fd::second_derivative_split(phi, breakpoint);
    const double kinetic = config.hbar() * config.hbar() / (2.0 * config.mass());
    for (auto& v : d2) v *= -kinetic;
    return phi.with_values(std::move(d2));
}

RootFunction::RootFunction(double k, double a, double shift, double joint,
                           double left_amplitude, double right_amplitude)
    : k_(k), a_(a), shift_(shift), joint_(joint), left_(left_amplitude),
      right_(right_amplitude) {}

double RootFunction::operator()(double x) const {
    if (!(x >= 0.0 && x <= a_))
        throw DomainError("root function evaluated outside [0, a]");
    if (x <= joint_) return left_ * std::sin(k_ * x);
    return -right_ * std::sin(k_ * (x - shift_));
}

RootFunction root_function(const SystemConfig& config, const EigenLevel& level) {
    const auto wave = eigenfunction::build_wave(config, level);
    const double shift = config.box_length() - pi / level.k;
    return RootFunction(level.k, config.box_length(), shift, config.delta_position(),
                        wave.left_amplitude(), wave.right_amplitude());
}

LadderFunction PlainBoxChain::ladder(int n) const {
    if (n < 1 || static_cast<std::size_t>(n) > steps.size())
        throw RangeError("chain step " + std::to_string(n) + " not available");
    const auto& s = steps[static_cast<std::size_t>(n - 1)];
    return LadderFunction(s.c, s.d, a, a);
}

PlainBoxChain plain_box_chain(const SystemConfig& config, int steps) {
    if (steps < 1) throw RangeError("plain_box_chain: need at least one step");
    const double a = config.box_length();
    const double hbar = config.hbar();
    const double two_m = 2.0 * config.mass();
    PlainBoxChain chain{a, hbar, config.mass(), {}};

    // f_n = c_n cot(d_n x) with poles at both walls fixes d_n = pi / a.
    // Step 1, f^2 + hbar f' + 2m E = 0:   c_1 (c_1 - hbar d) = 0, E_1 = c_1^2 / 2m.
    // Step n, matching csc^2 terms:      c_n^2 - hbar d c_n = c_{n-1}^2 + hbar d c_{n-1}
    //                                    => c_n = c_{n-1} + hbar d = n hbar pi / a,
    // matching constants:                2m E_n - c_n^2 = 2m E_{n-1} - c_{n-1}^2 = 0.
    for (int n = 1; n <= steps; ++n) {
        const double d = pi / a;
        const double c = n * hbar * pi / a;
        chain.steps.push_back(ChainStep{n, c, d, c * c / two_m});
    }
    return chain;
}

GridFunction chain_eigenstate(const PlainBoxChain& chain, int n, const SystemConfig& config,
                              std::size_t samples) {
    if (n < 1 || static_cast<std::size_t>(n) > chain.steps.size())
        throw RangeError("chain_eigenstate: level outside the chain");
    const double d = chain.steps.front().d;
    const double inv_sqrt_2m = 1.0 / std::sqrt(2.0 * config.mass());

    // Coefficients of sin^i cos^j (d x), keyed by (i, j). The creation
    // operators act on this representation exactly:
    //   a^dag_j s^i c^l = [(hbar d i + c_j) s^(i-1) c^(l+1) - hbar d l s^(i+1) c^(l-1)] / sqrt(2m).
    // Chained grid derivatives would amplify rounding by 1/dx per step.
    std::map<std::pair<int, int>, double> terms{{{n, 0}, 1.0}};
    for (int j = n - 1; j >= 1; --j) {
        const double cj = chain.steps[static_cast<std::size_t>(j - 1)].c;
        std::map<std::pair<int, int>, double> next;
        for (const auto& [power, coef] : terms) {
            const auto [i, l] = power;
            const double up = (chain.hbar * d * i + cj) * coef * inv_sqrt_2m;
            if (up != 0.0) {
                if (i == 0) throw DomainError("chain_eigenstate: creation left the domain");
                next[{i - 1, l + 1}] += up;
            }
            if (l > 0) next[{i + 1, l - 1}] -= chain.hbar * d * l * coef * inv_sqrt_2m;
        }
        terms = std::move(next);
    }

    auto phi = GridFunction::sample_midpoints(
        [&](double x) {
            const double s = std::sin(d * x);
            const double c = std::cos(d * x);
            double v = 0.0;
            for (const auto& [power, coef] : terms)
                v += coef * std::pow(s, power.first) * std::pow(c, power.second);
            return v;
        },
        0.0, chain.a, samples);
    const double norm = phi.l2_norm();
    for (auto& v : phi.mutable_values()) v /= norm;
    return phi;
}

}  // namespace deltabox::factorize
