#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagcube {

// Runs the command line given argv-style arguments (without the program
// name). Returns the process exit code: 0 all checks verified, 1 usage or
// parse errors, 2 refuted checks, 3 inconclusive checks.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diagcube
