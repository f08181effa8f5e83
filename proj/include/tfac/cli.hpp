#pragma once

#include <string>
#include <vector>

#include "tfac/errors.hpp"

namespace tfac::cli {

enum class Subcommand { Constants, Flow, Residual, Simulate, Convergence };

struct RunConfig {
    Subcommand subcommand = Subcommand::Constants;
    double alpha = 0.0;
    int n = 1;
    double eps = 0.0;
    double dr = 0.0;
    double dt = 0.0;
    double t = 0.0;
    double t_end = 0.0;
    double t_max = 0.0;
    double tol = 0.0;
    double p = 0.0;
    double r = 0.0;
    bool has_r = false;
    std::vector<double> eps_list;
    std::vector<double> dt_list;
    std::string regime;
    std::string out;   // empty: stdout
};

// Raised when --help was requested; carries the text to print.
struct HelpRequested {
    std::string text;
};

// args excludes the program name, e.g. {"constants", "--alpha", "0.5", ...}.
// A --config FILE option (per subcommand) loads `key = value` lines with `#`
// comments; command-line flags take precedence.
// Throws UsageError for malformed invocations, ValidationError for violated
// parameter invariants, HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

// Executes the subcommand and returns the complete output text. Pure:
// identical configs produce byte-identical output.
std::string run_command(const RunConfig& config);

// parse + run + write; maps errors to exit codes
// (0 ok, 2 usage/validation, 3 numeric, 4 i/o).
int main_entry(int argc, char** argv);

} // namespace tfac::cli
