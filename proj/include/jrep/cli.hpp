#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jrep::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAxiomFailed = 1,
  kUsageError = 2,
  kReproductionMismatch = 3,
};

/// Entry point of the `jrep` command line tool. `args` excludes the program
/// name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jrep::cli
