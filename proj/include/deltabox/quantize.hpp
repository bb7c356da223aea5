#pragma once

#include <optional>
#include <vector>

#include "deltabox/config.hpp"

namespace deltabox::quantize {

struct SolverSettings {
    /// Scan step is pi / (a * divisor).
    int scan_step_divisor = 16;
    /// Relative bracket width at which bisection stops.
    double k_tolerance = 1e-12;
    /// Search ceiling; defaults to (n_levels + 4) pi / a + g.
    std::optional<double> max_k;

    /// Throws RangeError for divisor < 8 or tolerance outside (0, 1e-6].
    void validate() const;
    double ceiling(const SystemConfig& config, int n_levels) const;
};

/// F(k) = k sin(k a) - g sin(p k a) sin((p - 1) k a).
double residual(const SystemConfig& config, double k);

/// |F(k)| / (1 + k a), the scale-free root quality used by the solver post-check.
double scaled_residual(const SystemConfig& config, double k);

/// Wave numbers j pi / (p a) and j pi / ((1 - p) a) below `ceiling`, merged.
///
/// These are the poles of k (cot((p-1) k a) - cot(p k a)). Where a left and a
/// right value coincide, sin(k a) = 0 there and the spike sits on a node.
struct Fence {
    double k;
    bool coincident;
};
std::vector<Fence> subbox_fences(const SystemConfig& config, double ceiling);

/// The n_levels smallest positive roots of F, strictly increasing.
///
/// Throws SearchCeilingExceeded when the ceiling is too low, RangeError on
/// bad settings or n_levels < 1.
Spectrum solve_spectrum(const SystemConfig& config, int n_levels,
                        const SolverSettings& settings = {});

/// lambda -> 0: k_n = n pi / a.
Spectrum weak_coupling_spectrum(const SystemConfig& config, int n_levels);

/// 1/lambda -> 0: sorted union of the spectra of [0, pa] and [pa, a],
/// duplicates kept.
Spectrum strong_coupling_spectrum(const SystemConfig& config, int n_levels);

}  // namespace deltabox::quantize
