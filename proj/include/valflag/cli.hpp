#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valflag {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1, // Distinguished, not a member, no certificate
  kUsage = 2,    // bad arguments, unreadable or malformed input
  kDomain = 3,   // input outside the domain of the requested operation
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace valflag
