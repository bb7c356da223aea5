#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltabox/config.hpp"

namespace deltabox::verify {

struct Check {
    std::string name;
    bool passed;
    double measured;
    double tolerance;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool passed() const;
};

struct Options {
    /// Replaces k_1 before the checks run (negative control).
    std::optional<double> inject_k;
    int riccati_points = 1000;
    std::size_t operator_grid = 10000;
    int quadrature_panels = 2048;
};

/// Runs every invariant of the spike-in-box solution on the given levels:
/// quantization residual, monotonicity, derivative jump, ladder jump,
/// Riccati identity, annihilation of the root function, root function =
/// eigenfunction, orthonormality, node count and the pointwise
/// Schrodinger residual.
Report run(const Spectrum& spectrum, const Options& options = {});

}  // namespace deltabox::verify
