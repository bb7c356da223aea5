#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltabox/config.hpp"

namespace deltabox::cli {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    double a = 1.0;
    double p = 0.5;
    double hbar = 1.0;
    double mass = 1.0;
    std::optional<double> lambda;
    std::optional<double> coupling_g;
    std::optional<int> levels;
    int level = 1;
    std::optional<int> samples;
    std::vector<int> grid;
    std::string format = "csv";
    std::string out;
    double tol = 1e-12;
    std::optional<double> amplitude;
    std::optional<double> inject_k;
    bool perturbative = false;
};

/// Builds the config from the flags; exactly one of --lambda / --coupling-g
/// unless `coupling_optional` (then a missing coupling means g = 0).
SystemConfig resolve_config(const Options& o, bool coupling_optional = false);

struct CommandResult {
    std::string text;
    int exit_code;
};

CommandResult cmd_spectrum(const Options& o);
CommandResult cmd_wave(const Options& o);
CommandResult cmd_fig1(const Options& o);
CommandResult cmd_ladder(const Options& o);
CommandResult cmd_verify(const Options& o);
CommandResult cmd_oracle(const Options& o);

}  // namespace deltabox::cli
