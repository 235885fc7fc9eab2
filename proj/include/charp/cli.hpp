#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace charp::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kDefinite = 0,
  kUsage = 1,
  kInconclusive = 2,
  kInternal = 3,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Comma-separated integers, e.g. "5,-5,0,0".
std::vector<std::int64_t> parse_weight(const std::string& text);

}  // namespace charp::cli
