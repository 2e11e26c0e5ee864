#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace invforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). `qlimit_env` is the value of
/// INVFORGE_QLIMIT, if set. Returns 0, 1 or 2 and never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& qlimit_env = std::nullopt);

}  // namespace invforge::cli
