#ifndef CLAW_CLI_HPP
#define CLAW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace claw {

/// Runs one CLI command.  Exit codes: 0 success or a true verdict, 1 a false
/// verdict, 2 errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace claw

#endif
