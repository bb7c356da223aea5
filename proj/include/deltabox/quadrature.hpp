#pragma once

#include <cstddef>

#include "deltabox/errors.hpp"

namespace deltabox {

/// Composite Simpson rule with `panels` parabolic panels (2 * panels subintervals).
template <typename F>
double composite_simpson(F&& f, double lo, double hi, int panels) {
    if (panels < 1) throw RangeError("composite_simpson: panels must be >= 1");
    if (hi == lo) return 0.0;
    const int n = 2 * panels;
    const double h = (hi - lo) / n;
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < n; ++i) {
        const double v = f(lo + i * h);
        if (i % 2 == 1)
            odd += v;
        else
            even += v;
    }
    return h / 3.0 * (f(lo) + 4.0 * odd + 2.0 * even + f(hi));
}

}  // namespace deltabox
