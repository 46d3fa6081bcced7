#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace soliton_lab::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics are single lines on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1.5", "pi", "pi/6", "2pi/3", "2*pi/3", "-pi/4".
double parse_angle(const std::string& text);

}  // namespace soliton_lab::cli
