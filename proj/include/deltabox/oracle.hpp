#pragma once

#include <vector>

#include "deltabox/config.hpp"

namespace deltabox::oracle {

struct SymmetricTridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // size n - 1

    std::size_t size() const noexcept { return diagonal.size(); }
};

enum class DeltaRegularization { linear_hat, nearest_point };

/// Three-point Dirichlet discretization of the Hamiltonian on x_i = i dx,
/// i = 1..n_interior, dx = a / (n_interior + 1).
struct DiscreteHamiltonian {
    int n_interior;
    double dx;
    std::vector<double> diagonal;
    double off_diagonal;
    std::vector<double> potential;

    SymmetricTridiagonal matrix() const;
    /// sum V_i dx, equal to lambda by construction.
    double delta_weight() const;
};

DiscreteHamiltonian discretize(const SystemConfig& config, int n_interior,
                               DeltaRegularization regularization =
                                   DeltaRegularization::linear_hat);

/// Number of eigenvalues strictly below `shift` (LDL^T inertia recurrence).
int sturm_count(const SymmetricTridiagonal& matrix, double shift);

/// The m smallest eigenvalues by Sturm bisection, ascending.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& matrix, int m,
                                       double rel_tol = 1e-12);
std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& hamiltonian, int m,
                                       double rel_tol = 1e-12);

/// Inverse iteration at a converged eigenvalue. Normalized so that
/// sum v_i^2 = 1 and the first component of largest magnitude among the
/// leading entries is positive.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& matrix, double eigenvalue,
                                      int iterations = 3);

/// Eigenvector on the interior grid, scaled to sum v_i^2 dx = 1 and v_1 > 0.
std::vector<double> eigenvector(const DiscreteHamiltonian& hamiltonian, double eigenvalue);

/// Rayleigh quotient in stiffness form, c sum (v_{i+1} - v_i)^2 + sum V_i v_i^2
/// over sum v_i^2 (walls v_0 = v_{n+1} = 0). All terms are non-negative, so
/// the quotient keeps relative accuracy at the bottom of the spectrum.
double rayleigh_quotient(const DiscreteHamiltonian& hamiltonian, const std::vector<double>& v);

/// Sturm bisection followed by one inverse-iteration Rayleigh polish per level.
std::vector<double> polished_eigenvalues(const DiscreteHamiltonian& hamiltonian, int m);

/// Closed-form spectrum of the spike-free discrete Laplacian.
std::vector<double> free_discrete_energies(const SystemConfig& config, int n_interior, int m);

struct ConvergenceRow {
    int n_interior;
    double dx;
    std::vector<double> energies;
    std::vector<double> abs_error;
};

struct ConvergenceStudy {
    std::vector<double> reference;
    std::vector<ConvergenceRow> rows;
    /// observed_order[r][l]: log(err_r / err_{r+1}) / log(dx_r / dx_{r+1}).
    std::vector<std::vector<double>> observed_order;
    /// Per level, least-squares slope of log error against log dx over all
    /// rows. With the spike between grid points the leading error carries a
    /// theta (1 - theta) factor (theta = fractional position of pa), so the
    /// pairwise orders scatter and only the fit is meaningful.
    std::vector<double> fitted_order;
};

/// Compares oracle energies against the transcendental spectrum. grid_sizes
/// must be strictly increasing (RangeError otherwise).
ConvergenceStudy convergence_study(const SystemConfig& config, int levels,
                                   const std::vector<int>& grid_sizes,
                                   DeltaRegularization regularization =
                                       DeltaRegularization::linear_hat);

}  // namespace deltabox::oracle
