#include "deltabox/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "deltabox/errors.hpp"

namespace deltabox::cli {

std::string version() { return DELTABOX_VERSION; }

namespace {

enum Flags : unsigned {
    kPhysics = 1u << 0,
    kLevels = 1u << 1,
    kLevel = 1u << 2,
    kSamples = 1u << 3,
    kGrid = 1u << 4,
    kAmplitude = 1u << 5,
    kInject = 1u << 6,
    kPerturbative = 1u << 7,
};

void add_options(CLI::App* sub, Options& o, unsigned flags) {
    if (flags & kPhysics) {
        sub->add_option("--a", o.a, "Box length a")->capture_default_str();
        sub->add_option("--p", o.p, "Spike position as a fraction of a, in (0, 1)")
            ->capture_default_str();
        sub->add_option("--lambda", o.lambda, "Spike strength lambda (>= 0)");
        sub->add_option("--coupling-g", o.coupling_g, "Coupling g = 2 m lambda / hbar^2");
        sub->add_option("--hbar", o.hbar, "Reduced Planck constant")->capture_default_str();
        sub->add_option("--mass", o.mass, "Particle mass")->capture_default_str();
        sub->add_option("--tol", o.tol, "Relative k tolerance of the root solver")
            ->capture_default_str();
    }
    if (flags & kLevels) sub->add_option("--levels", o.levels, "Number of levels");
    if (flags & kLevel)
        sub->add_option("--level", o.level, "Level index n (1-based)")->capture_default_str();
    if (flags & kSamples) sub->add_option("--samples", o.samples, "Number of sample points");
    if (flags & kGrid)
        sub->add_option("--grid", o.grid, "Interior grid sizes of the finite-difference oracle");
    if (flags & kAmplitude)
        sub->add_option("--amplitude", o.amplitude,
                        "Scale curves so that the left amplitude A equals this value");
    if (flags & kInject)
        sub->add_option("--inject-k", o.inject_k, "Replace k_1 before verifying (test hook)");
    if (flags & kPerturbative)
        sub->add_flag("--perturbative", o.perturbative,
                      "Compare small-g shifts with first-order perturbation theory");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectrum of a particle in a box with a repulsive delta spike"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    Options o;
    std::function<CommandResult(const Options&)> command;
    auto bind = [&](const char* name, const char* help, unsigned flags,
                    CommandResult (*fn)(const Options&)) {
        auto* sub = app.add_subcommand(name, help);
        add_options(sub, o, flags);
        sub->callback([&command, fn] { command = fn; });
    };
    bind("spectrum", "Solve the quantization condition for the lowest levels",
         kPhysics | kLevels, cmd_spectrum);
    bind("wave", "Sample one eigenfunction on a uniform grid",
         kPhysics | kLevel | kSamples | kAmplitude, cmd_wave);
    bind("ladder", "Sample the ladder function f_n with its jump at the spike",
         kPhysics | kLevel | kSamples, cmd_ladder);
    bind("verify", "Run the invariant suite and report pass/fail per check",
         kPhysics | kLevels | kInject, cmd_verify);
    bind("oracle", "Compare with the finite-difference Hamiltonian",
         kPhysics | kLevels | kGrid | kPerturbative, cmd_oracle);
    bind("fig1", "First three states for g = 8, a = 3, p = 1/2 (A = 1)",
         kSamples | kAmplitude, cmd_fig1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "deltabox: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const auto result = command(o);
        if (o.out.empty()) {
            out << result.text;
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) {
                err << "deltabox: cannot open " << o.out << " for writing\n";
                return kExitUsage;
            }
            file << result.text;
        }
        return result.exit_code;
    } catch (const UsageError& e) {
        err << "deltabox: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SearchCeilingExceeded& e) {
        err << "deltabox: " << e.what() << " (raise the search ceiling)\n";
        return kExitSearchCeiling;
    } catch (const RangeError& e) {
        err << "deltabox: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AttractiveCouplingUnsupported& e) {
        err << "deltabox: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "deltabox: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace deltabox::cli
