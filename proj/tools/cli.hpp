#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ectopsis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ectopsis::cli
