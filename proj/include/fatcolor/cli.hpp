#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatcolor::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1, // rejected coloring or oracle mismatch
    kUsage = 2,
    kBudgetExhausted = 3,
};

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fatcolor::cli
