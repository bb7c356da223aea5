#pragma once

#include <vector>

#include "deltabox/config.hpp"
#include "deltabox/eigenfunction.hpp"
#include "deltabox/grid.hpp"

namespace deltabox::factorize {

enum class Branch { left, right };

/// Real part f(x) of an annihilation operator a = (P + i f) / sqrt(2m).
///
/// f = c cot(d x) for x < pa and c cot(d (x - b)) for x > pa, with the shift
/// fixed by d (a - b) = pi so that both walls are poles. For a level of the
/// spiked box c = hbar k and d = k; the plain box chain uses c = n hbar pi / a,
/// d = pi / a. Besides the walls, f = hbar psi'/psi is also singular at every
/// interior node of the matching eigenfunction.
class LadderFunction {
  public:
    LadderFunction(double amplitude, double frequency, double a, double joint);

    double amplitude() const noexcept { return amplitude_; }
    double frequency() const noexcept { return frequency_; }
    double box_length() const noexcept { return a_; }
    double joint() const noexcept { return joint_; }
    double shift() const noexcept { return shift_; }

    Branch branch_of(double x) const;

    /// Throws DomainError outside (0, a) or at the joint.
    double operator()(double x) const;
    double derivative(double x) const;

    /// Cotangent argument used at x (d x or d (x - b)).
    double argument(double x) const;

    double left_limit() const noexcept;
    double right_limit() const noexcept;
    /// f(pa+) - f(pa-).
    double jump() const noexcept;

    /// True when pa is within `tolerance` (in argument units) of a pole of
    /// either branch.
    bool joint_is_singular(double tolerance = 1e-9) const noexcept;

  private:
    void check_domain(double x) const;

    double amplitude_;
    double frequency_;
    double a_;
    double joint_;
    double shift_;
};

/// Ladder function of a solved level. Throws NotAnEigenvalue when the jump
/// misses 2 m lambda / hbar by more than `tolerance` relative, or, for a
/// singular joint, when the quantization residual is not zero.
LadderFunction build_ladder(const SystemConfig& config, const EigenLevel& level,
                            double tolerance = 1e-9);

/// k {cot((p - 1) k a) - cot(p k a)} - 2 m lambda / hbar^2.
///
/// Throws PoleError when either argument lies within 1e-12 of a multiple of pi.
double ladder_jump_residual(const SystemConfig& config, double k);

/// f^2 / 2m + (hbar / 2m) f' + E at a regular point of one branch.
/// Throws DomainError at x = pa or outside (0, a); PoleError at a pole.
double riccati_residual(const LadderFunction& ladder, double x, const SystemConfig& config,
                        double energy);

/// Real representation of a phi = -i (hbar phi' - f phi) / sqrt(2m).
///
/// The global -i is dropped. Derivatives are fourth order and never straddle
/// pa. The grid must lie strictly inside (0, a), avoid pa and have
/// dx <= a / 512 (GridTooCoarse otherwise).
GridFunction apply_annihilation(const LadderFunction& ladder, const GridFunction& phi,
                                const SystemConfig& config);

/// Real representation of a^dagger phi = -i (hbar phi' + f phi) / sqrt(2m).
GridFunction apply_creation(const LadderFunction& ladder, const GridFunction& phi,
                            const SystemConfig& config);

/// a^dagger a phi (Hermitian, no phase), composed from the two grid operators.
GridFunction apply_lowered_product(const LadderFunction& ladder, const GridFunction& phi,
                                   const SystemConfig& config);

/// a a^dagger phi, composed from the two grid operators.
GridFunction apply_raised_product(const LadderFunction& ladder, const GridFunction& phi,
                                  const SystemConfig& config);

/// -(hbar^2 / 2m) phi'' with fourth-order stencils split at `breakpoint`.
GridFunction apply_kinetic(const GridFunction& phi, const SystemConfig& config,
                           double breakpoint);

/// Null function of a_n: A sin(k x) left of pa, -B sin(k (x - b)) right of it.
class RootFunction {
  public:
    RootFunction(double k, double a, double shift, double joint, double left_amplitude,
                 double right_amplitude);

    double k() const noexcept { return k_; }
    double shift() const noexcept { return shift_; }
    double joint() const noexcept { return joint_; }
    double left_amplitude() const noexcept { return left_; }
    double right_amplitude() const noexcept { return right_; }

    double operator()(double x) const;

  private:
    double k_;
    double a_;
    double shift_;
    double joint_;
    double left_;
    double right_;
};

/// Root function with the same normalization and sign as build_wave.
RootFunction root_function(const SystemConfig& config, const EigenLevel& level);

/// One step of the plain-box factorization chain,
/// a_n = (P + i c_n cot(d_n x)) / sqrt(2m).
struct ChainStep {
    int n;
    double c;
    double d;
    double energy;
};

struct PlainBoxChain {
    double a;
    double hbar;
    double mass;
    std::vector<ChainStep> steps;

    LadderFunction ladder(int n) const;
};

/// Solves a^dag_{n+1} a_{n+1} + E_{n+1} = a_n a^dag_n + E_n for the cotangent
/// ansatz. Lambda is ignored.
PlainBoxChain plain_box_chain(const SystemConfig& config, int steps);

/// a^dag_1 ... a^dag_{n-1} applied to the n-th root function sin^n(pi x / a),
/// then sampled on `samples` cell-centred points and scaled to unit grid norm.
/// The operators act exactly on a sin^i cos^j expansion, not on the grid.
GridFunction chain_eigenstate(const PlainBoxChain& chain, int n, const SystemConfig& config,
                              std::size_t samples = 10000);

}  // namespace deltabox::factorize
