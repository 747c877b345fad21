#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one invocation. `args` excludes the program name. Output goes to `out`
/// unless -o names a file; diagnostics go to `err`; `-` inputs read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hgs::cli
