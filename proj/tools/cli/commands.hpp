#pragma once

#include <ostream>

namespace wschatten::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kNumericFailure = 1,
    kUsageError = 2,
    kViolation = 3,
};

/// Central default tolerances; every one is overridable by a flag.
struct ToleranceDefaults {
    double holder = 1e-9;
    double horn = 1e-10;
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the CLI with the given arguments (argv[0] is the program name).
/// Regular output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wschatten::cli
