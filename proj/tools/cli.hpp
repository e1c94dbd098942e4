#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquemax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimViolated = 1;
inline constexpr int kExitUsage = 2;
/// The run stopped before finishing (interrupted search, unwritable output).
inline constexpr int kExitIncomplete = 3;

/// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliquemax::cli
