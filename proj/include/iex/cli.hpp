#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iex {

/// Dispatches one CLI invocation (argv without the program name).
/// Exit codes: 0 ok, 1 verification failure, 2 parse, 3 domain,
/// 4 not admissible, 5 connection, 6 budget.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iex
