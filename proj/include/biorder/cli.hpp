#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biorder::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kAnalysisError = 3,
  kUsageError = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biorder::cli
