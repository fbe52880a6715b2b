#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdsky/theorems.hpp"

namespace zdsky::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive range written "a..b", or a single value.
struct Range {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  bool operator==(const Range&) const = default;
};

Range parse_range(const std::string& text);

/// Largest N the tool will build tables for: $ZDSKY_MAX_N, default 8.
int max_exponent();

/// Prints one PASS/FAIL line per report (plus a JSON document on `out` when
/// `json`, with the text then going to `err`); kExitCheckFailed if any failed.
int report_checks(const std::string& suite, const std::vector<CheckReport>& reports, bool json, std::ostream& out,
                  std::ostream& err);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdsky::cli
