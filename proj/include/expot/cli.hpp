#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // tolerance breach, failed check, divergent norm
inline constexpr int kExitUsage = 2;    // bad flags, unknown molecule, unreadable registry

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expot::cli
