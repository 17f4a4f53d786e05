// Command-line front end.  Exit codes: 0 verified, 1 counterexample or
// engine disagreement, 2 usage error, 3 inconclusive.
#pragma once

#include <iosfwd>

namespace lefschetz::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInconclusive = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lefschetz::cli
