#include "deltabox/config.hpp"

#include <cmath>
#include <string>

#include "deltabox/errors.hpp"

namespace deltabox {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw RangeError(what);
}

}  // namespace

SystemConfig SystemConfig::make(double hbar, double mass, double a, double lambda, double p) {
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be finite and > 0");
    require(std::isfinite(mass) && mass > 0.0, "mass must be finite and > 0");
    require(std::isfinite(a) && a > 0.0, "box length a must be finite and > 0");
    require(std::isfinite(p) && p > 0.0 && p < 1.0, "delta fraction p must lie in (0, 1)");
    require(std::isfinite(lambda), "lambda must be finite");
    if (lambda < 0.0)
        throw AttractiveCouplingUnsupported(
            "lambda < 0 (attractive delta) is not supported: the ground state has E < 0");
    return SystemConfig(hbar, mass, a, lambda, p);
}

SystemConfig SystemConfig::from_coupling(double a, double p, double g, double hbar,
                                         double mass) {
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be finite and > 0");
    require(std::isfinite(mass) && mass > 0.0, "mass must be finite and > 0");
    require(std::isfinite(g), "coupling g must be finite");
    if (g < 0.0)
        throw AttractiveCouplingUnsupported(
            "coupling g < 0 (attractive delta) is not supported");
    return make(hbar, mass, a, g * hbar * hbar / (2.0 * mass), p);
}

double SystemConfig::k_of(double energy) const {
    if (!(energy >= 0.0)) throw RangeError("k_of: energy must be >= 0");
    return std::sqrt(2.0 * mass_ * energy) / hbar_;
}

EigenLevel make_level(const SystemConfig& config, int n, double k) {
    require(n >= 1, "level index n must be >= 1");
    require(std::isfinite(k) && k > 0.0, "wave number k must be finite and > 0");
    return EigenLevel{n, k, config.energy_of(k)};
}

const EigenLevel& Spectrum::level(int n) const {
    if (n < 1 || static_cast<std::size_t>(n) > levels.size())
        throw RangeError("level " + std::to_string(n) + " not in spectrum of size " +
                         std::to_string(levels.size()));
    return levels[static_cast<std::size_t>(n - 1)];
}

std::vector<double> Spectrum::wave_numbers() const {
    std::vector<double> out;
    out.reserve(levels.size());
    for (const auto& l : levels) out.push_back(l.k);
    return out;
}

std::vector<double> Spectrum::energies() const {
    std::vector<double> out;
    out.reserve(levels.size());
    for (const auto& l : levels) out.push_back(l.energy);
    return out;
}

bool Spectrum::is_strictly_increasing() const {
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i].k > levels[i - 1].k)) return false;
    return true;
}

bool Spectrum::is_nondecreasing() const {
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i].k < levels[i - 1].k) return false;
    return true;
}

Spectrum make_spectrum(const SystemConfig& config, const std::vector<double>& wave_numbers) {
    Spectrum s{config, {}};
    s.levels.reserve(wave_numbers.size());
    int n = 1;
    for (double k : wave_numbers) s.levels.push_back(make_level(config, n++, k));
    return s;
}

}  // namespace deltabox
