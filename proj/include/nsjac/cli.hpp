#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsjac/errors.hpp"

namespace nsjac {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitSpecial = 2,
    kExitNonSplit = 3,
    kExitInvalid = 4,
    /// An internal invariant broke; never expected.
    kExitInternal = 5,
};

int exit_code_for(ErrorKind kind);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsjac
