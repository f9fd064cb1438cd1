#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invforms::cli {

/// Exit codes: 0 decided, 1 input error, 2 mathematically undecided,
/// 3 failed internal consistency check.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (args excludes the program name).  The response goes
/// to `out`; error JSON goes to `out` as well so scripts see one stream.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace invforms::cli
