#pragma once

// Command-line front end. Kept in the library so tests can drive it with
// string arguments and captured streams.
//
// Exit codes: 0 all verdicts passed, 1 a verdict failed or requested
// constants are invalid, 2 usage or parameter error.

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpivot {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpivot
