#pragma once

// Command-line front end. The subcommands live in the library so that tests
// can drive them with captured streams.

#include "rrcf/real.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rrcf::cli {

enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,
  kInconclusive = 2,
  kUsage = 3,
  kDomain = 4,
};

/// Runs `rrcf <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders x with `sig` significant digits, in fixed notation when the
/// magnitude is moderate and scientific notation otherwise.
std::string format_value(const Real& x, int sig);

}  // namespace rrcf::cli
