#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betawalk::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

// "start:stop:step" (inclusive), "a,b,c" or a single number
std::vector<double> parse_grid(const std::string& text);

// 17 significant digits, enough to round-trip a double
std::string format_double(double v);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betawalk::cli
