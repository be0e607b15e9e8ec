#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riordan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMath = 3;

/// Default working precision and row count.
inline constexpr std::size_t kDefaultPrecision = 16;
inline constexpr std::size_t kDefaultRows = 8;

/// Runs one command line (without the program name). Results go to `out`,
/// notices and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riordan::cli
