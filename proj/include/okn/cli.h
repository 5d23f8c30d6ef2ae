// The okn command line, usable in-process for tests.

#ifndef OKN_CLI_H_
#define OKN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace okn {

// Exit codes of every subcommand.
enum ExitCode : int { kExitPositive = 0, kExitNegative = 1, kExitUsage = 2, kExitBound = 3 };

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okn

#endif  // OKN_CLI_H_
