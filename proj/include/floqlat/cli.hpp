#pragma once

#include <ostream>
#include <string_view>

namespace floqlat {

// Accepts decimal radians ("0.3") or multiples of pi ("pi", "-pi/8",
// "3pi/8", "3*pi/8", "0.5pi").
double parse_angle(std::string_view text);

// Entry point of the floqlat command-line tool. Data goes to --out (written
// atomically) or to `out`; diagnostics go to `err`. Returns the exit status:
// 0 success, 2 validation error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace floqlat
