// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crosstalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an angle: a decimal number, or a multiple of pi such as "pi",
/// "-pi/2", "3pi/4", "0.5*pi". Throws std::invalid_argument.
double parse_angle(const std::string& text);

/// 17 significant digits, '.' decimal separator, independent of locale.
std::string format_real(double value);

/// "0", "π/2", "3π/2", ... when value is a small-denominator multiple of pi,
/// otherwise format_real(value).
std::string format_pi_multiple(double value);

}  // namespace crosstalk::cli
