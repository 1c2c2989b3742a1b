#ifndef WARING_CLI_HPP
#define WARING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace waring {

enum ExitCode : int { kExitOk = 0, kExitUserError = 1, kExitCheckFailure = 2 };

/// Runs the command line (args[0] is the program name). Machine output goes
/// to `out`, logs and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring

#endif  // WARING_CLI_HPP
