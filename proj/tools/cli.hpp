#ifndef EDGEIDEAL_TOOLS_CLI_HPP
#define EDGEIDEAL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace edgeideal::cli {

enum ExitCode : int { kSuccess = 0, kProvedFailure = 1, kUsage = 2 };

// args excludes the program name. Everything is written to out or err;
// the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeideal::cli

#endif  // EDGEIDEAL_TOOLS_CLI_HPP
