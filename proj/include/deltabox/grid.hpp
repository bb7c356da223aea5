#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace deltabox {

/// Samples of a real function on the uniform grid x_i = x0 + i dx.
class GridFunction {
  public:
    /// Throws RangeError unless dx > 0 and values.size() >= 2.
    GridFunction(double x0, double dx, std::vector<double> values);

    /// Samples f at n points starting at x0.
    static GridFunction sample(const std::function<double(double)>& f, double x0, double dx,
                               std::size_t n);

    /// n cell-centred points (i + 1/2) L / n covering (lo, lo + L); never touches either end.
    static GridFunction sample_midpoints(const std::function<double(double)>& f, double lo,
                                         double hi, std::size_t n);

    double x0() const noexcept { return x0_; }
    double dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return values_.size(); }
    double x(std::size_t i) const noexcept { return x0_ + static_cast<double>(i) * dx_; }
    double x_last() const noexcept { return x(values_.size() - 1); }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    std::vector<double>& mutable_values() noexcept { return values_; }

    GridFunction with_values(std::vector<double> values) const;

    /// sqrt(sum v_i^2 dx).
    double l2_norm() const;
    double max_abs() const;

  private:
    double x0_;
    double dx_;
    std::vector<double> values_;
};

namespace fd {

/// Fourth-order first derivative; central in the interior, one-sided in the
/// first and last two points. Needs at least 5 samples.
std::vector<double> first_derivative(std::span<const double> f, double h);

/// Fourth-order second derivative; central in the interior, one-sided in the
/// first and last two points. Needs at least 6 samples.
std::vector<double> second_derivative(std::span<const double> f, double h);

/// Index ranges [begin, end) of the grid lying strictly left and right of a
/// breakpoint. Stencils never cross the breakpoint.
struct Segments {
    std::size_t left_end;     // points [0, left_end) have x < breakpoint
    std::size_t right_begin;  // points [right_begin, n) have x > breakpoint
};

/// Throws DomainError when a grid point coincides with the breakpoint.
Segments split_at(const GridFunction& grid, double breakpoint);

/// Derivative computed independently on each side of the breakpoint.
std::vector<double> first_derivative_split(const GridFunction& grid, double breakpoint);
std::vector<double> second_derivative_split(const GridFunction& grid, double breakpoint);

}  // namespace fd

}  // namespace deltabox
