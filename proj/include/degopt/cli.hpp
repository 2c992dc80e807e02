#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degopt {

// Runs the `degopt` command line. args[0] is the program name. Reports go
// to `out`, diagnostics to `err`. Exit codes: 0 success (including
// infeasible results), 1 failed verification or internal error, 2 input
// error, 3 precondition or limit error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degopt
