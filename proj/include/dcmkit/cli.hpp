#ifndef DCMKIT_CLI_HPP
#define DCMKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dcmkit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kSuccess = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPreconditionFailed = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Ceiling for --bound: DCMKIT_MAX_N when set and valid, never above the
/// hard bound.
int bound_ceiling();

} // namespace dcmkit::cli

#endif // DCMKIT_CLI_HPP
