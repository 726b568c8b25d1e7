#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repcat::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCrossCheckFailed = 1,
    kUsageError = 2,
    kCapacityError = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repcat::cli
