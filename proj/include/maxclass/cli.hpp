#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxclass {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 2 validation error, 3 internal inconsistency.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maxclass
