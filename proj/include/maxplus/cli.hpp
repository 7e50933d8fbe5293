#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxplus::cli {

enum ExitCode : int {
  kFeasible = 0,
  kOther = 1,
  kInfeasible = 2,
  kInvalidInput = 3,
  kInternalConsistency = 4,
  kOracleDisagreement = 5,
};

/// Entry point of the `lateness` tool. args excludes the program name.
/// Reports go to `out` (or to --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace maxplus::cli
