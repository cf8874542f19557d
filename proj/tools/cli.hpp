#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cntube::cli {

inline constexpr const char* kFormatVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadInput = 2,
  kIoError = 3,
  kCgPrecondition = 4,
};

// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest representation that reads back to the same double.
std::string format_double(double x);

} // namespace cntube::cli
