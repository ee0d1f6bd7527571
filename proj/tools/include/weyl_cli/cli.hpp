#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace weyl::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBadInput = 3 };

/// Pulls every `--tol.<name> <value>` or `--tol.<name>=<value>` out of
/// `args`. Throws std::invalid_argument for a missing or non-numeric value.
std::map<std::string, double> extractToleranceOverrides(std::vector<std::string>& args);

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
