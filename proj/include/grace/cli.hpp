#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grace/transformation.hpp"

namespace grace {

// Parses a comma-separated image literal such as "0,0,1"; n is the token
// count. Throws ParseError naming the offending index.
Transformation parse_function_literal(const std::string& text);

// Entry point behind the grace binary: args excludes the program name.
// Returns the process exit status: 0 success/PASS, 1 sweep counterexample,
// 2 usage/config/input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grace
