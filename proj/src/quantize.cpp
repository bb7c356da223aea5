#include "deltabox/quantize.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "deltabox/eigenfunction.hpp"
#include "deltabox/errors.hpp"

namespace deltabox::quantize {

namespace {

constexpr double pi = std::numbers::pi;

// Left and right sub-box wave numbers closer than this (relative) are one fence.
constexpr double kCoincidenceTolerance = 1e-10;

// Tangency guard: |F| at a coincident fence must be below this times (1 + k a).
constexpr double kNodeResidualTolerance = 1e-10;

// Bisection also continues until |G| <= this times (k + g).
constexpr double kClearedTolerance = 1e-12;

// Root post-check on |F(k)| / (1 + k a).
constexpr double kRootResidualTolerance = 1e-9;

// G(k) = k (cot((p-1) k a) - cot(p k a)) - g. F(k) = sin(p k a) sin((p-1) k a) G(k),
// and G is strictly increasing between consecutive fences, running from -inf
// to +inf (from a finite negative value on the first interval).
double cleared(const SystemConfig& c, double k) {
    const double a = c.box_length();
    const double p = c.fraction();
    const double t1 = p * k * a;
    const double t2 = (p - 1.0) * k * a;
    return k * (std::cos(t2) / std::sin(t2) - std::cos(t1) / std::sin(t1)) - c.coupling();
}

// Merged j pi / (p a), j pi / ((1 - p) a), produced in order.
class FenceStream {
  public:
    explicit FenceStream(const SystemConfig& c)
        : left_len_(c.delta_position()),
          right_len_(c.box_length() - c.delta_position()),
          a_(c.box_length()) {}

    Fence next() {
        const double l = static_cast<double>(jl_) * pi / left_len_;
        const double r = static_cast<double>(jr_) * pi / right_len_;
        if (std::abs(l - r) <= kCoincidenceTolerance * std::max(l, r)) {
            // k a = (jl + jr) pi exactly at a shared node.
            const double k = static_cast<double>(jl_ + jr_) * pi / a_;
            ++jl_;
            ++jr_;
            return {k, true};
        }
        if (l < r) {
            ++jl_;
            return {l, false};
        }
        ++jr_;
        return {r, false};
    }

  private:
    double left_len_;
    double right_len_;
    double a_;
    long jl_ = 1;
    long jr_ = 1;
};

struct Bracket {
    double lo;
    double hi;
};

double scaled(const SystemConfig& c, double k);

// Bisection on the monotone G; the sign at the bracket ends is never evaluated.
// Past the requested width it keeps halving until both F and G are small,
// which matters when g is large and F is steep.
double bisect(const SystemConfig& c, Bracket b, double tol) {
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break;
        const double v = cleared(c, mid);
        if (b.hi - b.lo <= tol * b.hi && scaled(c, mid) <= kRootResidualTolerance / 16.0 &&
            std::abs(v) <= kClearedTolerance * (mid + c.coupling()))
            return mid;
        if (v == 0.0) return mid;
        if (v > 0.0)
            b.hi = mid;
        else
            b.lo = mid;
    }
    return 0.5 * (b.lo + b.hi);
}

// Uniform scan of (lo, hi) with the configured step. Returns a tight bracket
// around the unique sign change of G, or nothing when G < 0 up to hi (only
// possible for the open interval ending at the ceiling).
std::optional<Bracket> scan_interval(const SystemConfig& c, double lo, double hi,
                                     bool hi_is_fence, double step) {
    const double margin = 1e-13 * hi;
    double left = lo;
    long j = static_cast<long>(std::floor(lo / step)) + 1;
    for (;; ++j) {
        const double u = static_cast<double>(j) * step;
        if (u >= hi - margin) break;
        if (u <= lo + margin) continue;
        const double v = cleared(c, u);
        if (v == 0.0) return Bracket{u, u};
        if (v > 0.0) return Bracket{left, u};
        left = u;
    }
    if (hi_is_fence) return Bracket{left, hi};
    if (cleared(c, hi) > 0.0) return Bracket{left, hi};
    return std::nullopt;
}

double scaled(const SystemConfig& c, double k) {
    return std::abs(residual(c, k)) / (1.0 + std::abs(k) * c.box_length());
}

}  // namespace

void SolverSettings::validate() const {
    if (scan_step_divisor < 8)
        throw RangeError("scan_step_divisor must be >= 8, got " +
                         std::to_string(scan_step_divisor));
    if (!(k_tolerance > 0.0 && k_tolerance <= 1e-6))
        throw RangeError("k_tolerance must lie in (0, 1e-6]");
    if (max_k && !(*max_k > 0.0 && std::isfinite(*max_k)))
        throw RangeError("max_k must be finite and > 0");
}

double SolverSettings::ceiling(const SystemConfig& config, int n_levels) const {
    if (max_k) return *max_k;
    return (n_levels + 4) * pi / config.box_length() + config.coupling();
}

double residual(const SystemConfig& config, double k) {
    const double a = config.box_length();
    const double p = config.fraction();
    return k * std::sin(k * a) -
           config.coupling() * std::sin(p * k * a) * std::sin((p - 1.0) * k * a);
}

double scaled_residual(const SystemConfig& config, double k) { return scaled(config, k); }

std::vector<Fence> subbox_fences(const SystemConfig& config, double ceiling) {
    std::vector<Fence> out;
    FenceStream stream(config);
    for (Fence f = stream.next(); f.k < ceiling; f = stream.next()) out.push_back(f);
    return out;
}

Spectrum solve_spectrum(const SystemConfig& config, int n_levels,
                        const SolverSettings& settings) {
    settings.validate();
    if (n_levels < 1) throw RangeError("n_levels must be >= 1");

    // Without the spike every root is exactly n pi / a.
    const double a = config.box_length();
    const double ceiling = settings.ceiling(config, n_levels);
    if (config.coupling() == 0.0) {
        const int below = static_cast<int>(std::ceil(ceiling * a / pi)) - 1;
        if (below < n_levels)
            throw SearchCeilingExceeded("found " + std::to_string(below) + " of " +
                                            std::to_string(n_levels) + " levels below max_k = " +
                                            std::to_string(ceiling),
                                        below, ceiling);
        return weak_coupling_spectrum(config, n_levels);
    }
    const double step = pi / (a * settings.scan_step_divisor);

    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(n_levels));
    auto accept = [&](double k) {
        if (!eigenfunction::has_nontrivial_wave(config, k)) return;
        if (scaled_residual(config, k) > kRootResidualTolerance)
            throw ConvergenceFailure("root k = " + std::to_string(k) +
                                     " fails the residual post-check");
        roots.push_back(k);
    };

    FenceStream stream(config);
    double lo = 0.0;
    while (static_cast<int>(roots.size()) < n_levels) {
        const Fence fence = stream.next();
        const bool closed = fence.k < ceiling;
        const double hi = closed ? fence.k : ceiling;

        if (auto br = scan_interval(config, lo, hi, closed, step)) {
            const double k = br->lo == br->hi ? br->lo : bisect(config, *br, settings.k_tolerance);
            accept(k);
        }
        if (!closed) break;

        if (fence.coincident && static_cast<int>(roots.size()) < n_levels &&
            scaled_residual(config, fence.k) <= kNodeResidualTolerance)
            accept(fence.k);
        lo = fence.k;
    }

    if (static_cast<int>(roots.size()) < n_levels)
        throw SearchCeilingExceeded("found " + std::to_string(roots.size()) + " of " +
                                        std::to_string(n_levels) + " levels below max_k = " +
                                        std::to_string(ceiling),
                                    static_cast<int>(roots.size()), ceiling);
    return make_spectrum(config, roots);
}

Spectrum weak_coupling_spectrum(const SystemConfig& config, int n_levels) {
    if (n_levels < 1) throw RangeError("n_levels must be >= 1");
    std::vector<double> ks;
    for (int n = 1; n <= n_levels; ++n) ks.push_back(n * pi / config.box_length());
    return make_spectrum(config, ks);
}

Spectrum strong_coupling_spectrum(const SystemConfig& config, int n_levels) {
    if (n_levels < 1) throw RangeError("n_levels must be >= 1");
    const double left = config.delta_position();
    const double right = config.box_length() - left;
    std::vector<double> ks;
    ks.reserve(static_cast<std::size_t>(n_levels));
    int jl = 1;
    int jr = 1;
    while (static_cast<int>(ks.size()) < n_levels) {
        const double l = jl * pi / left;
        const double r = jr * pi / right;
        if (l <= r) {
            ks.push_back(l);
            ++jl;
        } else {
            ks.push_back(r);
            ++jr;
        }
    }
    return make_spectrum(config, ks);
}

}  // namespace deltabox::quantize
