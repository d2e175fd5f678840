#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic::cli {

enum class Command { eval, verify, sweep, suite };
enum class OutputFormat { json, csv };

struct CliConfig {
    Command command = Command::eval;
    std::string target;  // function or identity name; config name for suite
    std::map<std::string, std::string> parameters;
    double tol = 1e-6;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::json;
};

// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Parses and validates argv against the registry of operations and
/// identities; unknown commands, targets or keys are rejected.
/// Throws UsageError.
CliConfig parse_args(const std::vector<std::string>& argv);

/// Runs the configured command, writing results to `out` (or the configured
/// output file) and diagnostics to `err`. Returns the process exit code.
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute with UsageError mapped to exit code 2.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace harmonic::cli
