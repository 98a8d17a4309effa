#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace baryassoc::cli {

/// Exit status: 0 success, 1 the report is negative (not B-associative,
/// search mismatch, failed identity), 2 usage or parse error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baryassoc::cli
