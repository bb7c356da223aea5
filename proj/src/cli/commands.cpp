#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deltabox/cli.hpp"
#include "deltabox/eigenfunction.hpp"
#include "deltabox/errors.hpp"
#include "deltabox/factorize.hpp"
#include "deltabox/oracle.hpp"
#include "deltabox/quantize.hpp"
#include "deltabox/verify.hpp"
#include "output.hpp"

namespace deltabox::cli {

namespace {

constexpr double pi = std::numbers::pi;

bool json_wanted(const Options& o) { return o.format == "json"; }

quantize::SolverSettings solver_settings(const Options& o) {
    quantize::SolverSettings s;
    s.k_tolerance = o.tol;
    return s;
}

Json level_json(const EigenLevel& l) {
    Json j;
    j["n"] = l.n;
    j["k"] = l.k;
    j["energy"] = l.energy;
    return j;
}

// Jump-condition tolerance for waves built from a solver run at `tol`.
double wave_tolerance(const Options& o) { return std::max(1e-8, 1e3 * o.tol); }

int sample_count(const Options& o, int fallback) {
    const int n = o.samples.value_or(fallback);
    if (n < 2) throw UsageError("--samples must be >= 2");
    return n;
}

int level_count(const Options& o, int fallback) {
    const int n = o.levels.value_or(fallback);
    if (n < 1) throw UsageError("--levels must be >= 1");
    return n;
}

Json curve_json(const EigenLevel& level, const PiecewiseWave& wave, int samples) {
    Json j = level_json(level);
    j["left_amplitude"] = wave.left_amplitude();
    j["right_amplitude"] = wave.right_amplitude();
    Json xs = Json::array();
    Json ys = Json::array();
    const double a = wave.box_length();
    for (int i = 0; i < samples; ++i) {
        const double x = a * i / (samples - 1);
        xs.push_back(x);
        ys.push_back(wave(x));
    }
    j["x"] = std::move(xs);
    j["psi"] = std::move(ys);
    return j;
}

// Shared by `wave` and `fig1`: one column per curve.
CommandResult emit_curves(const std::string& command, const Options& o,
                          const SystemConfig& config, const std::vector<int>& indices,
                          int samples, std::optional<double> amplitude) {
    const int top = *std::max_element(indices.begin(), indices.end());
    const auto spectrum = quantize::solve_spectrum(config, top, solver_settings(o));
    std::vector<PiecewiseWave> waves;
    for (int n : indices) {
        auto w = eigenfunction::build_wave(config, spectrum.level(n), wave_tolerance(o));
        if (amplitude) w = eigenfunction::with_left_amplitude(w, *amplitude);
        waves.push_back(w);
    }

    Json settings;
    settings["levels"] = indices;
    settings["samples"] = samples;
    settings["k_tolerance"] = o.tol;
    settings["normalization"] = amplitude ? "left_amplitude" : "unit_l2";
    if (amplitude) settings["amplitude"] = *amplitude;

    if (json_wanted(o)) {
        Json curves = Json::array();
        for (std::size_t i = 0; i < waves.size(); ++i)
            curves.push_back(curve_json(spectrum.level(indices[i]), waves[i], samples));
        Json payload;
        payload["curves"] = std::move(curves);
        return {dump_json(envelope(command, config, settings, payload)), kExitOk};
    }

    std::string text = csv_preamble(command, config, settings);
    std::vector<std::string> header{"x"};
    for (int n : indices) header.push_back(indices.size() == 1 ? "psi" : "psi_" + std::to_string(n));
    text += csv_row(header);
    const double a = config.box_length();
    for (int i = 0; i < samples; ++i) {
        const double x = a * i / (samples - 1);
        std::vector<std::string> row{csv_number(x)};
        for (const auto& w : waves) row.push_back(csv_number(w(x)));
        text += csv_row(row);
    }
    return {text, kExitOk};
}

}  // namespace

SystemConfig resolve_config(const Options& o, bool coupling_optional) {
    if (o.lambda && o.coupling_g)
        throw UsageError("give exactly one of --lambda or --coupling-g, not both");
    if (!o.lambda && !o.coupling_g && !coupling_optional)
        throw UsageError("one of --lambda or --coupling-g is required");
    try {
        if (o.lambda) return SystemConfig::make(o.hbar, o.mass, o.a, *o.lambda, o.p);
        return SystemConfig::from_coupling(o.a, o.p, o.coupling_g.value_or(0.0), o.hbar, o.mass);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

CommandResult cmd_spectrum(const Options& o) {
    const auto config = resolve_config(o);
    const int n = level_count(o, 3);
    const auto settings = solver_settings(o);
    const auto spectrum = quantize::solve_spectrum(config, n, settings);

    Json s;
    s["levels"] = n;
    s["k_tolerance"] = settings.k_tolerance;
    s["scan_step_divisor"] = settings.scan_step_divisor;
    s["max_k"] = settings.ceiling(config, n);

    if (json_wanted(o)) {
        Json levels = Json::array();
        for (const auto& l : spectrum.levels) levels.push_back(level_json(l));
        Json payload;
        payload["levels"] = std::move(levels);
        return {dump_json(envelope("spectrum", config, s, payload)), kExitOk};
    }
    std::string text = csv_preamble("spectrum", config, s);
    text += csv_row({"n", "k", "energy"});
    for (const auto& l : spectrum.levels)
        text += csv_row({std::to_string(l.n), csv_number(l.k), csv_number(l.energy)});
    return {text, kExitOk};
}

CommandResult cmd_wave(const Options& o) {
    const auto config = resolve_config(o);
    if (o.level < 1) throw UsageError("--level must be >= 1");
    return emit_curves("wave", o, config, {o.level}, sample_count(o, 601), o.amplitude);
}

CommandResult cmd_fig1(const Options& o) {
    const auto config = SystemConfig::from_coupling(3.0, 0.5, 8.0);
    return emit_curves("fig1", o, config, {1, 2, 3}, sample_count(o, 601),
                       o.amplitude.value_or(1.0));
}

CommandResult cmd_ladder(const Options& o) {
    const auto config = resolve_config(o);
    if (o.level < 1) throw UsageError("--level must be >= 1");
    const int samples = sample_count(o, 600);
    const auto spectrum = quantize::solve_spectrum(config, o.level, solver_settings(o));
    const auto& level = spectrum.level(o.level);
    const auto ladder = factorize::build_ladder(config, level);

    const double a = config.box_length();
    std::vector<double> xs;
    for (int i = 0; i < samples; ++i) {
        const double x = a * (i + 0.5) / samples;
        if (x != config.delta_position()) xs.push_back(x);
    }

    Json s;
    s["level"] = o.level;
    s["samples"] = samples;
    s["k_tolerance"] = o.tol;

    if (json_wanted(o)) {
        Json payload;
        payload["level"] = level_json(level);
        payload["shift_b"] = ladder.shift();
        payload["left_limit"] = ladder.left_limit();
        payload["right_limit"] = ladder.right_limit();
        payload["jump"] = ladder.jump();
        payload["expected_jump"] = config.ladder_jump();
        payload["joint_singular"] = ladder.joint_is_singular();
        Json jx = Json::array(), jf = Json::array(), jb = Json::array();
        for (double x : xs) {
            jx.push_back(x);
            jf.push_back(ladder(x));
            jb.push_back(ladder.branch_of(x) == factorize::Branch::left ? "left" : "right");
        }
        payload["x"] = std::move(jx);
        payload["f"] = std::move(jf);
        payload["branch"] = std::move(jb);
        return {dump_json(envelope("ladder", config, s, payload)), kExitOk};
    }

    std::string text = csv_preamble("ladder", config, s);
    text += "# level n=" + std::to_string(level.n) + " k=" + json_number(level.k) +
            " shift_b=" + json_number(ladder.shift()) + "\n";
    text += "# jump f(pa+)-f(pa-)=" + json_number(ladder.jump()) +
            " expected=" + json_number(config.ladder_jump()) +
            " joint_singular=" + (ladder.joint_is_singular() ? "true" : "false") + "\n";
    text += csv_row({"x", "f", "branch"});
    for (double x : xs)
        text += csv_row({csv_number(x), csv_number(ladder(x)),
                         ladder.branch_of(x) == factorize::Branch::left ? "left" : "right"});
    return {text, kExitOk};
}

CommandResult cmd_verify(const Options& o) {
    const auto config = resolve_config(o);
    const int n = level_count(o, 5);
    const auto spectrum = quantize::solve_spectrum(config, n, solver_settings(o));
    verify::Options vo;
    vo.inject_k = o.inject_k;
    const auto report = verify::run(spectrum, vo);

    Json s;
    s["levels"] = n;
    s["k_tolerance"] = o.tol;
    if (o.inject_k) s["inject_k"] = *o.inject_k;

    const int code = report.passed() ? kExitOk : kExitVerificationFailed;
    if (o.format == "csv") {
        std::string text = csv_preamble("verify", config, s);
        text += csv_row({"check", "passed", "measured", "tolerance"});
        for (const auto& c : report.checks)
            text += csv_row({c.name, c.passed ? "true" : "false", csv_number(c.measured),
                             csv_number(c.tolerance)});
        return {text, code};
    }
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["measured"] = c.measured;
        j["tolerance"] = c.tolerance;
        j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    Json levels = Json::array();
    for (const auto& l : spectrum.levels) levels.push_back(level_json(l));
    Json payload;
    payload["passed"] = report.passed();
    payload["levels"] = std::move(levels);
    payload["checks"] = std::move(checks);
    return {dump_json(envelope("verify", config, s, payload)), code};
}

namespace {

CommandResult perturbative_table(const Options& o) {
    const auto base = resolve_config(o, true);
    const int n = level_count(o, 3);
    const std::vector<double> couplings{1e-3, 1e-2, 1e-1};
    quantize::SolverSettings tight;
    tight.k_tolerance = 1e-15;

    const auto unperturbed = quantize::weak_coupling_spectrum(base, n);
    struct Row {
        double g;
        int n;
        double shift;
        double first_order;
        double ratio;
    };
    std::vector<Row> rows;
    for (double g : couplings) {
        const auto cfg = SystemConfig::from_coupling(base.box_length(), base.fraction(), g,
                                                     base.hbar(), base.mass());
        const auto spec = quantize::solve_spectrum(cfg, n, tight);
        for (int l = 1; l <= n; ++l) {
            const double s = std::sin(l * pi * base.fraction());
            const double first = cfg.lambda() * (2.0 / cfg.box_length()) * s * s;
            const double shift = spec.level(l).energy - unperturbed.level(l).energy;
            const double ratio = s * s < 1e-12 ? std::nan("") : shift / first;
            rows.push_back({g, l, shift, first, ratio});
        }
    }

    Json s;
    s["levels"] = n;
    s["couplings"] = couplings;
    if (json_wanted(o)) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["g"] = r.g;
            j["n"] = r.n;
            j["shift"] = r.shift;
            j["first_order"] = r.first_order;
            j["ratio"] = r.ratio;
            j["deviation"] = std::abs(r.ratio - 1.0);
            arr.push_back(std::move(j));
        }
        Json payload;
        payload["perturbative"] = std::move(arr);
        return {dump_json(envelope("oracle", base, s, payload)), kExitOk};
    }
    std::string text = csv_preamble("oracle", base, s);
    text += csv_row({"g", "n", "shift", "first_order", "ratio", "deviation"});
    for (const auto& r : rows)
        text += csv_row({csv_number(r.g), std::to_string(r.n), csv_number(r.shift),
                         csv_number(r.first_order), csv_number(r.ratio),
                         csv_number(std::abs(r.ratio - 1.0))});
    return {text, kExitOk};
}

}  // namespace

CommandResult cmd_oracle(const Options& o) {
    if (o.perturbative) return perturbative_table(o);
    const auto config = resolve_config(o);
    const int n = level_count(o, 3);
    const std::vector<int> grids =
        o.grid.empty() ? std::vector<int>{751, 1501, 3001, 5999} : o.grid;
    for (int g : grids)
        if (g < 3 || g < n) throw UsageError("--grid sizes must be >= max(3, --levels)");
    oracle::ConvergenceStudy study;
    try {
        study = oracle::convergence_study(config, n, grids);
    } catch (const RangeError& e) {
        throw UsageError(e.what());
    }

    // Spike-free case: the discrete spectrum is known in closed form.
    std::optional<double> closed_form_dev;
    if (config.coupling() == 0.0) {
        double dev = 0.0;
        for (const auto& row : study.rows) {
            const auto exact = oracle::free_discrete_energies(config, row.n_interior, n);
            for (int l = 0; l < n; ++l)
                dev = std::max(dev, std::abs(row.energies[l] - exact[l]) / exact[l]);
        }
        closed_form_dev = dev;
    }

    Json s;
    s["levels"] = n;
    s["grid"] = grids;
    s["regularization"] = "linear_hat";

    if (json_wanted(o)) {
        Json rows = Json::array();
        for (const auto& r : study.rows) {
            Json j;
            j["n_interior"] = r.n_interior;
            j["dx"] = r.dx;
            j["energies"] = r.energies;
            j["abs_error"] = r.abs_error;
            rows.push_back(std::move(j));
        }
        Json payload;
        payload["reference"] = study.reference;
        payload["rows"] = std::move(rows);
        payload["observed_order"] = study.observed_order;
        payload["fitted_order"] = study.fitted_order;
        payload["closed_form_max_rel_dev"] =
            closed_form_dev ? Json(*closed_form_dev) : Json(nullptr);
        return {dump_json(envelope("oracle", config, s, payload)), kExitOk};
    }
    std::string text = csv_preamble("oracle", config, s);
    if (closed_form_dev)
        text += "# closed_form_max_rel_dev=" + json_number(*closed_form_dev) + "\n";
    if (!study.fitted_order.empty()) {
        text += "# fitted_order=";
        for (std::size_t l = 0; l < study.fitted_order.size(); ++l)
            text += (l ? ";" : "") + csv_number(study.fitted_order[l]);
        text += "\n";
    }
    text += csv_row({"n_interior", "dx", "level", "energy", "reference", "abs_error",
                     "observed_order"});
    for (std::size_t r = 0; r < study.rows.size(); ++r) {
        const auto& row = study.rows[r];
        for (int l = 0; l < n; ++l) {
            const auto li = static_cast<std::size_t>(l);
            text += csv_row({std::to_string(row.n_interior), csv_number(row.dx),
                             std::to_string(l + 1), csv_number(row.energies[li]),
                             csv_number(study.reference[li]), csv_number(row.abs_error[li]),
                             r == 0 ? "" : csv_number(study.observed_order[r - 1][li])});
        }
    }
    return {text, kExitOk};
}

}  // namespace deltabox::cli
