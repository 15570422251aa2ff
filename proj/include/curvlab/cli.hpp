#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace curvlab::cli {

inline constexpr const char* kToolName = "curvlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kUsageError = 2 };

enum class Command { eigen, bound, volume, verify, trial, schwarzschild, sweep };
enum class OutputFormat { csv, json };
enum class UnitMode { natural, si };

struct RunConfig {
    Command command = Command::eigen;
    std::vector<double> curvatures;      ///< --K; a single value for eigen/volume/trial
    std::optional<double> r0;            ///< --r0 (eigen, trial)
    std::vector<double> radii;           ///< --r0 list for sweep
    std::optional<double> r;             ///< --r single radius (bound, volume)
    double r_min = 0.05;
    double r_max = 3.141592653589793;
    int steps = 200;
    int n = 1;
    int n_max = 3;
    std::optional<std::uint64_t> seed;
    int trials = 1000;
    int degree = 4;
    double r_s = 1.0;
    double tolerance = 1e-8;
    OutputFormat format = OutputFormat::csv;
    UnitMode units = UnitMode::natural;
    std::optional<std::string> output_path;
};

/// Parses argv-style arguments (without the program name) into a RunConfig.
/// Throws std::invalid_argument on usage errors. Returns nullopt when help was
/// requested; the help text is written to `help_out`.
std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::ostream& help_out);

/// Executes a parsed configuration, writing the report to `out` (or to the
/// configured output path) and diagnostics to `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_arguments followed by run, mapping every failure to the exit-code contract.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace curvlab::cli
