#pragma once

#include <iosfwd>

namespace concise::cli {

/// Exit codes: 0 success, 1 runtime failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Entry point of the `concise` tool with injectable streams. Binary output
/// always goes to files named with --output.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace concise::cli
