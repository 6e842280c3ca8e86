#ifndef BROCARD_TOOLS_CLI_HPP_
#define BROCARD_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace brocard::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brocard::cli

#endif
