#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>

namespace eulercount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (calibrate, table, simulate, predict, estimate, render,
/// asymptotic). `args` excludes the program name. Results go to `out` unless
/// --out names a file; diagnostics go to `err` as a single line.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Parses "a:b" (inclusive) or a single "a".
std::pair<int, int> parse_range(const std::string& text);

}  // namespace eulercount::cli
