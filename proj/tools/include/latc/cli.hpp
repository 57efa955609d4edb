#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMalformedInput = 2,
  kResourceLimit = 3,
  kCertificateUnsound = 4,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latc::cli
