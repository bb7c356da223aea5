#include "deltabox/grid.hpp"

#include <algorithm>
#include <cmath>

#include "deltabox/errors.hpp"

namespace deltabox {

GridFunction::GridFunction(double x0, double dx, std::vector<double> values)
    : x0_(x0), dx_(dx), values_(std::move(values)) {
    if (!(dx_ > 0.0) || !std::isfinite(dx_)) throw RangeError("GridFunction: dx must be > 0");
    if (values_.size() < 2) throw RangeError("GridFunction: need at least 2 samples");
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, double x0, double dx,
                                  std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(x0 + static_cast<double>(i) * dx);
    return GridFunction(x0, dx, std::move(v));
}

GridFunction GridFunction::sample_midpoints(const std::function<double(double)>& f, double lo,
                                            double hi, std::size_t n) {
    const double dx = (hi - lo) / static_cast<double>(n);
    return sample(f, lo + 0.5 * dx, dx, n);
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
    return GridFunction(x0_, dx_, std::move(values));
}

double GridFunction::l2_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s * dx_);
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

namespace fd {

std::vector<double> first_derivative(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw GridTooCoarse("first_derivative: need at least 5 points per segment");
    std::vector<double> d(n);
    const double s = 1.0 / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * s;
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
                f[n - 5]) * s;
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                3.0 * f[n - 5]) * s;
    return d;
}

std::vector<double> second_derivative(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 6) throw GridTooCoarse("second_derivative: need at least 6 points per segment");
    std::vector<double> d(n);
    const double s = 1.0 / (12.0 * h * h);
    d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] -
            10.0 * f[5]) * s;
    d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * s;
    d[n - 2] = (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] -
                6.0 * f[n - 5] + f[n - 6]) * s;
    d[n - 1] = (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] +
                61.0 * f[n - 5] - 10.0 * f[n - 6]) * s;
    return d;
}

Segments split_at(const GridFunction& grid, double breakpoint) {
    const std::size_t n = grid.size();
    std::size_t left_end = 0;
    while (left_end < n && grid.x(left_end) < breakpoint) ++left_end;
    if (left_end < n &&
        std::abs(grid.x(left_end) - breakpoint) <= 1e-12 * std::max(1.0, std::abs(breakpoint)))
        throw DomainError("grid point coincides with the breakpoint x = " +
                          std::to_string(breakpoint));
    return Segments{left_end, left_end};
}

namespace {

template <typename Op>
std::vector<double> split_apply(const GridFunction& grid, double breakpoint, Op op) {
    const auto seg = split_at(grid, breakpoint);
    const auto v = grid.values();
    std::vector<double> out(grid.size());
    if (seg.left_end > 0) {
        auto left = op(v.subspan(0, seg.left_end), grid.dx());
        std::copy(left.begin(), left.end(), out.begin());
    }
    if (seg.right_begin < grid.size()) {
        auto right = op(v.subspan(seg.right_begin), grid.dx());
        std::copy(right.begin(), right.end(), out.begin() + static_cast<long>(seg.right_begin));
    }
    return out;
}

}  // namespace

std::vector<double> first_derivative_split(const GridFunction& grid, double breakpoint) {
    return split_apply(grid, breakpoint, [](std::span<const double> f, double h) {
        return first_derivative(f, h);
    });
}

std::vector<double> second_derivative_split(const GridFunction& grid, double breakpoint) {
    return split_apply(grid, breakpoint, [](std::span<const double> f, double h) {
        return second_derivative(f, h);
    });
}

}  // namespace fd
}  // namespace deltabox
