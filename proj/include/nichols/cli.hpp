#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nichols {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_undecided = 2, exit_internal = 3 };

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nichols
