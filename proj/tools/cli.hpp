#pragma once

#include <ostream>
#include <span>
#include <string>

namespace blockcheck::cli {

// Exit statuses beyond the per-subcommand verdicts.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitResource = 70;

/// Runs one invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace blockcheck::cli
