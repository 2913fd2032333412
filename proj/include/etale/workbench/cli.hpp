#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etale::workbench {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitBoundExceeded = 3,
  kExitUnknownCommand = 4,
};

/// Runs one workbench command. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etale::workbench
