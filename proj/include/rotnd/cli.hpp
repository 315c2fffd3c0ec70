#pragma once

#include <iosfwd>

namespace rotnd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

/// Entry point of the `rotnd` tool: subcommands rotate, reverse, verify,
/// bench and gen. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rotnd::cli
