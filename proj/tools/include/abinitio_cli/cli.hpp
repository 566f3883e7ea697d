#ifndef ABINITIO_CLI_CLI_HPP
#define ABINITIO_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace abinitio::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Returns 0 on
/// success, 1 when a verification found violations (or a library invariant
/// broke), 2 on a usage error or invalid input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abinitio::cli

#endif  // ABINITIO_CLI_CLI_HPP
