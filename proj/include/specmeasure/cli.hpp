#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specmeasure::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kConfigError = 2,   // bad arguments or unparsable input data
    kInfeasible = 3,    // MELE moment constraint cannot be met
    kIoError = 4,
};

/// Runs `specmeasure <estimate|simulate|benchmark|pickands> [--flag value]...`.
/// `args` excludes the program name. Tables go to --output or `out`;
/// diagnostics and the estimate summary go to `err` (one line per message).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specmeasure::cli
