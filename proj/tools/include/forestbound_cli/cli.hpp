#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forestbound::cli {

// Exit codes of the forestbound tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kIoFailure = 3,
  kInternal = 4,  // audit failure or other library fault
};

// Runs one subcommand. `args` excludes the program name. Normal output goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forestbound::cli
