#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecd::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kTimeout = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecd::cli
