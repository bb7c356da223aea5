#include "deltabox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "deltabox/errors.hpp"
#include "deltabox/quantize.hpp"

namespace deltabox::oracle {

namespace {

// Fractional grid offsets this close to 0 or 1 count as on-grid.
constexpr double kOnGridSnap = 1e-9;

struct Interval {
    double lo;
    double hi;
};

Interval gershgorin(const SymmetricTridiagonal& t) {
    const std::size_t n = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.off_diagonal[i - 1]);
        if (i + 1 < n) r += std::abs(t.off_diagonal[i]);
        lo = std::min(lo, t.diagonal[i] - r);
        hi = std::max(hi, t.diagonal[i] + r);
    }
    const double pad = 2.0 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(lo), std::abs(hi)) * static_cast<double>(n);
    return {lo - pad - 1e-300, hi + pad + 1e-300};
}

// Smallest admissible |pivot| in the inertia recurrence.
double pivot_floor(const SymmetricTridiagonal& t) {
    double m = 1.0;
    for (double e : t.off_diagonal) m = std::max(m, e * e);
    return std::numeric_limits<double>::min() * m;
}

// Gaussian elimination with partial pivoting for a tridiagonal system;
// zero pivots are nudged so that near-singular shifts still yield a vector.
std::vector<double> solve_shifted(const SymmetricTridiagonal& t, double shift,
                                  std::vector<double> b) {
    const std::size_t n = t.size();
    std::vector<double> d(n);
    std::vector<double> du(t.off_diagonal);
    std::vector<double> dl(t.off_diagonal);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diagonal[i] - shift;
    const double tiny = std::numeric_limits<double>::epsilon() *
                        std::max(1.0, std::abs(shift));
    auto nudge = [&](double& v) {
        if (v == 0.0) v = tiny;
    };
    if (n == 1) {
        nudge(d[0]);
        b[0] /= d[0];
        return b;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            nudge(d[i]);
            const double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            dl[i] = 0.0;
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            const double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                dl[i] = du[i + 1];
                du[i + 1] = -fact * dl[i];
            } else {
                dl[i] = 0.0;
            }
            du[i] = temp;
            const double tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - fact * b[i + 1];
        }
    }
    nudge(d[n - 1]);
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
        b[i] = (b[i] - du[i] * b[i + 1] - dl[i] * b[i + 2]) / d[i];
    return b;
}

}  // namespace

SymmetricTridiagonal DiscreteHamiltonian::matrix() const {
    return SymmetricTridiagonal{
        diagonal, std::vector<double>(diagonal.empty() ? 0 : diagonal.size() - 1,
                                      off_diagonal)};
}

double DiscreteHamiltonian::delta_weight() const {
    double s = 0.0;
    for (double v : potential) s += v;
    return s * dx;
}

DiscreteHamiltonian discretize(const SystemConfig& config, int n_interior,
                               DeltaRegularization regularization) {
    if (n_interior < 3) throw RangeError("discretize: n_interior must be >= 3");
    const double a = config.box_length();
    const double dx = a / (n_interior + 1);
    const double c = config.hbar() * config.hbar() / (2.0 * config.mass() * dx * dx);

    std::vector<double> potential(static_cast<std::size_t>(n_interior), 0.0);
    // Grid point x_j = j dx sits at vector index j - 1; the walls j = 0 and
    // j = n_interior + 1 carry no unknown.
    auto deposit = [&](long j, double weight) {
        if (j >= 1 && j <= n_interior) potential[static_cast<std::size_t>(j - 1)] += weight / dx;
    };
    const double pos = config.delta_position() / dx;
    long j = static_cast<long>(std::floor(pos));
    double theta = pos - static_cast<double>(j);
    if (theta < kOnGridSnap) {
        theta = 0.0;
    } else if (theta > 1.0 - kOnGridSnap) {
        ++j;
        theta = 0.0;
    }
    const double lambda = config.lambda();
    if (regularization == DeltaRegularization::nearest_point) {
        deposit(theta < 0.5 ? j : j + 1, lambda);
    } else {
        deposit(j, lambda * (1.0 - theta));
        if (theta > 0.0) deposit(j + 1, lambda * theta);
    }

    DiscreteHamiltonian h{n_interior, dx, {}, -c, potential};
    h.diagonal.resize(potential.size());
    for (std::size_t i = 0; i < potential.size(); ++i) h.diagonal[i] = 2.0 * c + potential[i];
    return h;
}

int sturm_count(const SymmetricTridiagonal& t, double shift) {
    const std::size_t n = t.size();
    const double floor = pivot_floor(t);
    int count = 0;
    double q = t.diagonal[0] - shift;
    for (std::size_t i = 0;; ++i) {
        if (std::abs(q) < floor) q = -floor;
        if (q < 0.0) ++count;
        if (i + 1 == n) break;
        const double e = t.off_diagonal[i];
        q = t.diagonal[i + 1] - shift - e * e / q;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, int m, double rel_tol) {
    const std::size_t n = t.size();
    if (n == 0 || t.off_diagonal.size() + 1 != n)
        throw RangeError("lowest_eigenvalues: malformed tridiagonal matrix");
    if (m < 1 || static_cast<std::size_t>(m) > n)
        throw RangeError("lowest_eigenvalues: need 1 <= m <= n");
    const auto bounds = gershgorin(t);
    const double abs_floor = std::numeric_limits<double>::min();

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m));
    double lower = bounds.lo;
    for (int idx = 0; idx < m; ++idx) {
        double lo = lower;
        double hi = bounds.hi;
        bool converged = false;
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)) + abs_floor ||
                mid <= lo || mid >= hi) {
                converged = true;
                break;
            }
            if (sturm_count(t, mid) > idx)
                hi = mid;
            else
                lo = mid;
        }
        if (!converged)
            throw ConvergenceFailure("Sturm bisection did not converge for eigenvalue " +
                                     std::to_string(idx + 1));
        out.push_back(0.5 * (lo + hi));
        lower = lo;
    }
    return out;
}

std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& h, int m, double rel_tol) {
    return lowest_eigenvalues(h.matrix(), m, rel_tol);
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      int iterations) {
    const std::size_t n = t.size();
    std::vector<double> v(n);
    // Deterministic start with components along every low mode.
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
    for (int it = 0; it < iterations; ++it) {
        v = solve_shifted(t, eigenvalue, std::move(v));
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw ConvergenceFailure("inverse iteration produced a degenerate vector");
        for (double& x : v) x /= norm;
    }
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    for (double x : v) {
        if (std::abs(x) > 1e-8 * vmax) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            break;
        }
    }
    return v;
}

std::vector<double> eigenvector(const DiscreteHamiltonian& h, double eigenvalue) {
    auto v = inverse_iteration(h.matrix(), eigenvalue);
    const double scale = 1.0 / std::sqrt(h.dx);
    for (double& x : v) x *= scale;
    return v;
}

double rayleigh_quotient(const DiscreteHamiltonian& h, const std::vector<double>& v) {
    const double c = -h.off_diagonal;
    double kinetic = 0.0;
    double potential = 0.0;
    double norm = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - prev;
        kinetic += d * d;
        potential += h.potential[i] * v[i] * v[i];
        norm += v[i] * v[i];
        prev = v[i];
    }
    kinetic += prev * prev;
    return (c * kinetic + potential) / norm;
}

std::vector<double> polished_eigenvalues(const DiscreteHamiltonian& h, int m) {
    auto values = lowest_eigenvalues(h, m);
    const auto t = h.matrix();
    for (auto& e : values) e = rayleigh_quotient(h, inverse_iteration(t, e));
    return values;
}

std::vector<double> free_discrete_energies(const SystemConfig& config, int n_interior, int m) {
    const double a = config.box_length();
    const double dx = a / (n_interior + 1);
    const double c = config.hbar() * config.hbar() / (2.0 * config.mass() * dx * dx);
    std::vector<double> out;
    for (int j = 1; j <= m; ++j) {
        // 2c (1 - cos t) = 4c sin^2(t / 2), the latter without cancellation.
        const double s = std::sin(0.5 * j * std::numbers::pi * dx / a);
        out.push_back(4.0 * c * s * s);
    }
    return out;
}

ConvergenceStudy convergence_study(const SystemConfig& config, int levels,
                                   const std::vector<int>& grid_sizes,
                                   DeltaRegularization regularization) {
    if (grid_sizes.empty()) throw RangeError("convergence_study: no grid sizes");
    for (std::size_t i = 1; i < grid_sizes.size(); ++i)
        if (grid_sizes[i] <= grid_sizes[i - 1])
            throw RangeError("convergence_study: grid sizes must be strictly increasing");

    quantize::SolverSettings settings;
    settings.k_tolerance = 1e-15;
    ConvergenceStudy study;
    study.reference = quantize::solve_spectrum(config, levels, settings).energies();

    for (int n : grid_sizes) {
        const auto h = discretize(config, n, regularization);
        ConvergenceRow row{n, h.dx, polished_eigenvalues(h, levels), {}};
        for (int l = 0; l < levels; ++l)
            row.abs_error.push_back(std::abs(row.energies[static_cast<std::size_t>(l)] -
                                             study.reference[static_cast<std::size_t>(l)]));
        study.rows.push_back(std::move(row));
    }
    for (std::size_t r = 0; r + 1 < study.rows.size(); ++r) {
        const auto& coarse = study.rows[r];
        const auto& fine = study.rows[r + 1];
        std::vector<double> order;
        for (int l = 0; l < levels; ++l) {
            const auto li = static_cast<std::size_t>(l);
            order.push_back(std::log(coarse.abs_error[li] / fine.abs_error[li]) /
                            std::log(coarse.dx / fine.dx));
        }
        study.observed_order.push_back(std::move(order));
    }
    if (study.rows.size() >= 2) {
        // Least-squares slope of log err against log dx over all grids.
        for (int l = 0; l < levels; ++l) {
            const auto li = static_cast<std::size_t>(l);
            double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
            const double m = static_cast<double>(study.rows.size());
            for (const auto& row : study.rows) {
                const double lx = std::log(row.dx);
                const double ly = std::log(row.abs_error[li]);
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
            }
            study.fitted_order.push_back((m * sxy - sx * sy) / (m * sxx - sx * sx));
        }
    }
    return study;
}

}  // namespace deltabox::oracle
