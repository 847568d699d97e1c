#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sublorentz/error.hpp"

namespace sublorentz {

/// Exit codes of the command-line front end.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kIndeterminate = 2, kInputError = 3 };

int exit_code_for(ErrorKind kind);

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sublorentz
