#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uiseq::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_not_ui = 1,
  exit_usage = 2,
  exit_exhausted = 3,
};

/// Runs one command line (args excludes the program name). Documents go to
/// out, diagnostics to err. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uiseq::cli
