#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hpcc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kSelfCheckFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kValidationError = 3;
inline constexpr int kInstanceTooLarge = 4;
inline constexpr int kCompareMismatch = 5;

// Runs one command line (without the program name). Reads the instance from
// --input or from in; writes the document to --output or to out and
// diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hpcc::cli
