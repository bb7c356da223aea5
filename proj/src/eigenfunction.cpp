#include "deltabox/eigenfunction.hpp"

#include <cmath>
#include <string>

#include "deltabox/errors.hpp"
#include "deltabox/quadrature.hpp"

namespace deltabox {

namespace {

// Both joint sines below this: the spike sits on a node of the global sine.
constexpr double kDegenerateJoint = 1e-9;

// Integral of sin^2(k u) over an interval of length len ending (or starting) at a zero.
double sine_square_integral(double k, double len) {
    return 0.5 * len - std::sin(2.0 * k * len) / (4.0 * k);
}

}  // namespace

PiecewiseWave::PiecewiseWave(double k, double a, double joint, double left_amplitude,
                             double right_amplitude)
    : k_(k), a_(a), joint_(joint), left_(left_amplitude), right_(right_amplitude) {
    if (!(k > 0.0)) throw RangeError("PiecewiseWave: k must be > 0");
    if (!(a > 0.0) || !(joint > 0.0 && joint < a))
        throw RangeError("PiecewiseWave: need 0 < joint < a");
}

void PiecewiseWave::check_domain(double x) const {
    if (!(x >= 0.0 && x <= a_))
        throw DomainError("x = " + std::to_string(x) + " outside [0, " + std::to_string(a_) +
                          "]");
}

double PiecewiseWave::operator()(double x) const {
    check_domain(x);
    if (x <= joint_) return left_ * std::sin(k_ * x);
    return right_ * std::sin(k_ * (x - a_));
}

double PiecewiseWave::derivative(double x) const {
    check_domain(x);
    if (x <= joint_) return left_ * k_ * std::cos(k_ * x);
    return right_ * k_ * std::cos(k_ * (x - a_));
}

double PiecewiseWave::second_derivative(double x) const { return -k_ * k_ * (*this)(x); }

double PiecewiseWave::value_at_joint() const noexcept { return left_ * std::sin(k_ * joint_); }

double PiecewiseWave::left_derivative_at_joint() const noexcept {
    return left_ * k_ * std::cos(k_ * joint_);
}

double PiecewiseWave::right_derivative_at_joint() const noexcept {
    return right_ * k_ * std::cos(k_ * (joint_ - a_));
}

double PiecewiseWave::derivative_jump() const noexcept {
    return right_derivative_at_joint() - left_derivative_at_joint();
}

double PiecewiseWave::continuity_mismatch() const noexcept {
    return left_ * std::sin(k_ * joint_) - right_ * std::sin(k_ * (joint_ - a_));
}

double PiecewiseWave::norm_squared() const noexcept {
    return left_ * left_ * sine_square_integral(k_, joint_) +
           right_ * right_ * sine_square_integral(k_, a_ - joint_);
}

PiecewiseWave PiecewiseWave::scaled(double factor) const {
    return PiecewiseWave(k_, a_, joint_, left_ * factor, right_ * factor);
}

namespace eigenfunction {

JointAmplitudes joint_amplitudes(const SystemConfig& config, double k) {
    const double a = config.box_length();
    const double pa = config.delta_position();
    const double s_left = std::sin(k * pa);
    const double s_right = std::sin(k * (pa - a));
    if (std::abs(s_left) < kDegenerateJoint && std::abs(s_right) < kDegenerateJoint) {
        // sin(k x) = cos(k a) sin(k (x - a)) when k a is a multiple of pi.
        return {1.0, std::cos(k * a) >= 0.0 ? 1.0 : -1.0, true};
    }
    // A sin(k pa) = B sin(k (pa - a))  <=>  (A, B) ~ (sin(k (pa - a)), sin(k pa)).
    return {s_right, s_left, false};
}

bool has_nontrivial_wave(const SystemConfig& config, double k) {
    const auto amp = joint_amplitudes(config, k);
    return amp.left != 0.0 || amp.right != 0.0;
}

PiecewiseWave make_wave(const SystemConfig& config, double k) {
    const auto amp = joint_amplitudes(config, k);
    if (amp.left == 0.0 && amp.right == 0.0)
        throw NotAnEigenvalue("k = " + std::to_string(k) + " gives psi = 0");
    PiecewiseWave raw(k, config.box_length(), config.delta_position(), amp.left, amp.right);
    double scale = 1.0 / std::sqrt(raw.norm_squared());
    // psi'(0+) = A k; with A = 0 fall back to psi'(a-) = B k < 0.
    if (amp.left < 0.0 || (amp.left == 0.0 && amp.right > 0.0)) scale = -scale;
    return raw.scaled(scale);
}

double jump_condition_residual(const PiecewiseWave& wave, const SystemConfig& config) {
    return wave.derivative_jump() - config.coupling() * wave.value_at_joint();
}

PiecewiseWave build_wave(const SystemConfig& config, const EigenLevel& level,
                         double tolerance) {
    auto wave = make_wave(config, level.k);
    const double k = wave.k();
    const double scale = std::abs(wave.left_derivative_at_joint()) +
                         std::abs(wave.right_derivative_at_joint()) +
                         config.coupling() * std::abs(wave.value_at_joint()) +
                         k * std::abs(wave.left_amplitude());
    const double res = jump_condition_residual(wave, config);
    if (!(std::abs(res) <= tolerance * scale))
        throw NotAnEigenvalue("k = " + std::to_string(k) +
                              " violates the derivative jump condition (residual " +
                              std::to_string(res) + ")");
    return wave;
}

PiecewiseWave with_left_amplitude(const PiecewiseWave& wave, double amplitude) {
    if (!(std::isfinite(amplitude) && amplitude != 0.0))
        throw RangeError("with_left_amplitude: amplitude must be finite and nonzero");
    if (wave.left_amplitude() == 0.0)
        throw DomainError("with_left_amplitude: wave has no left branch");
    return wave.scaled(amplitude / wave.left_amplitude());
}

double evaluate(const PiecewiseWave& wave, double x) { return wave(x); }

double derivative_jump(const PiecewiseWave& wave) { return wave.derivative_jump(); }

double schrodinger_residual(const PiecewiseWave& wave, const SystemConfig& config,
                            double energy, double x) {
    if (x == wave.joint()) throw DomainError("schrodinger_residual: x = pa excluded");
    const double kinetic = config.hbar() * config.hbar() / (2.0 * config.mass());
    return -kinetic * wave.second_derivative(x) - energy * wave(x);
}

double inner_product(const PiecewiseWave& lhs, const PiecewiseWave& rhs, int panels) {
    if (lhs.box_length() != rhs.box_length() || lhs.joint() != rhs.joint())
        throw DomainError("inner_product: waves live in different boxes");
    const double a = lhs.box_length();
    const double pa = lhs.joint();
    const double kl = lhs.k();
    const double kr = rhs.k();
    const double left = composite_simpson(
        [&](double x) { return lhs.left_amplitude() * std::sin(kl * x) *
                               rhs.left_amplitude() * std::sin(kr * x); },
        0.0, pa, panels);
    const double right = composite_simpson(
        [&](double x) { return lhs.right_amplitude() * std::sin(kl * (x - a)) *
                               rhs.right_amplitude() * std::sin(kr * (x - a)); },
        pa, a, panels);
    return left + right;
}

int count_interior_nodes(const PiecewiseWave& wave, int samples) {
    const double h = wave.box_length() / samples;
    int nodes = 0;
    int prev = 0;
    for (int i = 0; i < samples; ++i) {
        const double v = wave((i + 0.5) * h);
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++nodes;
        prev = s;
    }
    return nodes;
}

}  // namespace eigenfunction
}  // namespace deltabox
