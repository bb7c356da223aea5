#pragma once

#include <cstddef>
#include <vector>

namespace deltabox {

/// Physical parameters of a particle confined to [0, a] with a repulsive
/// spike lambda * delta(x - p a).
///
/// The spectrum depends on lambda only through the coupling
/// g = 2 m lambda / hbar^2 (units 1/length).
class SystemConfig {
  public:
    /// Throws RangeError naming the violated constraint, or
    /// AttractiveCouplingUnsupported when lambda < 0.
    static SystemConfig make(double hbar, double mass, double a, double lambda, double p);

    /// Builds the config from g directly; lambda = g hbar^2 / (2 m).
    static SystemConfig from_coupling(double a, double p, double g, double hbar = 1.0,
                                      double mass = 1.0);

    double hbar() const noexcept { return hbar_; }
    double mass() const noexcept { return mass_; }
    double box_length() const noexcept { return a_; }
    double lambda() const noexcept { return lambda_; }
    double fraction() const noexcept { return p_; }

    /// x0 = p a.
    double delta_position() const noexcept { return p_ * a_; }

    /// g = 2 m lambda / hbar^2.
    double coupling() const noexcept { return 2.0 * mass_ * lambda_ / (hbar_ * hbar_); }

    /// Jump of the ladder function at the spike, 2 m lambda / hbar = g hbar.
    double ladder_jump() const noexcept { return 2.0 * mass_ * lambda_ / hbar_; }

    double energy_of(double k) const noexcept { return hbar_ * hbar_ * k * k / (2.0 * mass_); }

    /// Inverse of energy_of for E >= 0.
    double k_of(double energy) const;

    bool operator==(const SystemConfig&) const = default;

  private:
    SystemConfig(double hbar, double mass, double a, double lambda, double p)
        : hbar_(hbar), mass_(mass), a_(a), lambda_(lambda), p_(p) {}

    double hbar_;
    double mass_;
    double a_;
    double lambda_;
    double p_;
};

inline SystemConfig make_config(double hbar, double mass, double a, double lambda, double p) {
    return SystemConfig::make(hbar, mass, a, lambda, p);
}

/// One bound level. Use make_level so that energy is always hbar^2 k^2 / 2m.
struct EigenLevel {
    int n;
    double k;
    double energy;
};

/// Throws RangeError unless n >= 1 and k > 0.
EigenLevel make_level(const SystemConfig& config, int n, double k);

/// Ordered list of levels for one configuration.
///
/// Spectra from the root solver are strictly increasing; the split-box
/// limit keeps degenerate pairs, so ordering is checked, not enforced.
struct Spectrum {
    SystemConfig config;
    std::vector<EigenLevel> levels;

    std::size_t size() const noexcept { return levels.size(); }
    const EigenLevel& operator[](std::size_t i) const { return levels[i]; }
    const EigenLevel& level(int n) const;

    std::vector<double> wave_numbers() const;
    std::vector<double> energies() const;

    bool is_strictly_increasing() const;
    bool is_nondecreasing() const;
};

Spectrum make_spectrum(const SystemConfig& config, const std::vector<double>& wave_numbers);

}  // namespace deltabox
