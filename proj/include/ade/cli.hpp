#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ade {

/// Exit codes of the adesurf command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one adesurf invocation; args excludes the program name. Reports go
/// to out (or the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ade
