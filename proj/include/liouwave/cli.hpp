#ifndef LIOUWAVE_CLI_HPP
#define LIOUWAVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "liouwave/profile.hpp"

namespace liouwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitVerify = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "bump:a:b" or "file:PATH". Throws ConfigError on malformed specs.
InitialProfile parse_profile(const std::string& spec);

/// Two-column (X, f) CSV. Lines starting with '#' and a non-numeric header
/// line are skipped.
InitialProfile read_profile_csv(const std::string& path);

/// "min:max:count" with count >= 1 (count == 1 gives {min}).
std::vector<double> parse_grid(const std::string& spec);

} // namespace liouwave::cli

#endif
