#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace refinemask::cli {

/// Exit codes of the refinemask command.
enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,
  kParseFailure = 2,
  kIoFailure = 3,
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refinemask::cli
