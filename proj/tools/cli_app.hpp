#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccx::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kValidation = 2;
inline constexpr int kExpectation = 3;

// Runs the ccx command line. args excludes the program name. Input defaults to `in`
// and output to `out` whenever a command is not given file names.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ccx::cli
