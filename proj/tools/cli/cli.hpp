#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a2g::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< file, parse or computation error
inline constexpr int kExitUsage = 2;    ///< bad flags or out-of-domain option values

/// Entry point of the `a2g` tool. Data goes to `out` (or --output), messages
/// and warnings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a2g::cli
