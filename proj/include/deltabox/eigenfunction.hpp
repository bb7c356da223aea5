#pragma once

#include "deltabox/config.hpp"

namespace deltabox {

/// psi(x) = A sin(k x) on [0, pa], B sin(k (x - a)) on [pa, a].
class PiecewiseWave {
  public:
    PiecewiseWave(double k, double a, double joint, double left_amplitude,
                  double right_amplitude);

    double k() const noexcept { return k_; }
    double box_length() const noexcept { return a_; }
    double joint() const noexcept { return joint_; }
    double left_amplitude() const noexcept { return left_; }
    double right_amplitude() const noexcept { return right_; }

    /// Left branch at the joint. Throws DomainError outside [0, a].
    double operator()(double x) const;
    /// Left derivative at the joint.
    double derivative(double x) const;
    /// Second derivative, -k^2 psi on either branch.
    double second_derivative(double x) const;

    double value_at_joint() const noexcept;
    double left_derivative_at_joint() const noexcept;
    double right_derivative_at_joint() const noexcept;

    /// psi'(pa+) - psi'(pa-).
    double derivative_jump() const noexcept;

    /// A sin(k pa) - B sin(k (pa - a)).
    double continuity_mismatch() const noexcept;

    /// Exact integral of psi^2 over [0, a].
    double norm_squared() const noexcept;

    PiecewiseWave scaled(double factor) const;

  private:
    void check_domain(double x) const;

    double k_;
    double a_;
    double joint_;
    double left_;
    double right_;
};

namespace eigenfunction {

/// Unnormalized amplitudes (A, B) that make psi continuous at pa.
///
/// When both sin(k pa) and sin(k (pa - a)) vanish the joint is degenerate and
/// the amplitudes of the single global sine are returned.
struct JointAmplitudes {
    double left;
    double right;
    bool degenerate_joint;
};
JointAmplitudes joint_amplitudes(const SystemConfig& config, double k);

/// True unless the continuous two-branch function for this k is identically zero.
bool has_nontrivial_wave(const SystemConfig& config, double k);

/// Continuous, L2-normalized wave with psi'(0+) > 0. No eigenvalue check.
PiecewiseWave make_wave(const SystemConfig& config, double k);

/// make_wave plus the jump-condition check. Throws NotAnEigenvalue when
/// |jump - g psi(pa)| exceeds `tolerance` relative to the jump scale.
PiecewiseWave build_wave(const SystemConfig& config, const EigenLevel& level,
                         double tolerance = 1e-8);

/// Same shape rescaled so that the left amplitude equals `amplitude`.
PiecewiseWave with_left_amplitude(const PiecewiseWave& wave, double amplitude);

double evaluate(const PiecewiseWave& wave, double x);
double derivative_jump(const PiecewiseWave& wave);

/// derivative_jump - g psi(pa).
double jump_condition_residual(const PiecewiseWave& wave, const SystemConfig& config);

/// -(hbar^2 / 2m) psi''(x) - E psi(x); the joint is excluded.
double schrodinger_residual(const PiecewiseWave& wave, const SystemConfig& config,
                            double energy, double x);

/// L2 inner product by composite Simpson on [0, pa] and [pa, a] separately.
/// Throws DomainError if the waves do not share a and pa.
double inner_product(const PiecewiseWave& lhs, const PiecewiseWave& rhs, int panels = 2048);

/// Sign changes of psi at `samples` cell-centred points in (0, a).
int count_interior_nodes(const PiecewiseWave& wave, int samples = 20000);

}  // namespace eigenfunction
}  // namespace deltabox
