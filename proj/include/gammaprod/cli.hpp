#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammaprod {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification or claim check failed
inline constexpr int kExitUsage = 2;   // bad arguments or out-of-domain input

/// Runs one command. `args` excludes the program name.
///
///   decompose <n>
///   identities <n> [--format text|latex|json]
///   verify <n> [--tol <real>] [--coset-of <x>] [--json]
///   survey --max <N> [--json] [--check-claims] [--threads <k>]
///   mersenne <m> [--format text|latex|json]
///   full-product <n> [--tol <real>]
///
/// `--ascii` (anywhere) writes Gamma/pi instead of the Unicode glyphs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammaprod
