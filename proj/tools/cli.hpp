#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esbss::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,           // success, or the checked property holds
    kNegative = 1,     // property fails / input rejected on semantic grounds
    kInputError = 2,   // unreadable or malformed input, bad arguments
    kResourceLimit = 3 // exact search ran out of budget
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esbss::cli
