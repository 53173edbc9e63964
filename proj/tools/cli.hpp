#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctri::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2, kResourceLimit = 3 };

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctri::cli
