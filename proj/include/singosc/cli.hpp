#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singosc::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kConfigError = 2 };

/// Runs one subcommand. Records go to `out` (or the --output file),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singosc::cli
