#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf_forge::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kFieldTooSmall = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf_forge::cli
