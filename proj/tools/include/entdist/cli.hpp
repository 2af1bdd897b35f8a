#pragma once

#include <iosfwd>

namespace entdist::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSemantic = 3;
inline constexpr int kNumeric = 4;

// Runs `entdist <command> ...`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entdist::cli
