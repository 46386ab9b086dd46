#pragma once

#include <string>

#include "bentforge/boolean_function.hpp"
#include "bentforge/spectral.hpp"

namespace bentforge {

// Truth-table text formats (both bit-exact):
//   binary  "0001"  character at position x (left to right, 0-based) is f(x)
//   hex     "8e"    4 table bits per digit; table index 0 is the least
//                   significant bit of the first (leftmost) digit
// Strings containing only 0/1 parse as binary unless a "0x" prefix forces
// hex; with n given, a length of 2^n selects binary and 2^(n-2) selects hex.
BooleanFunction parse_truth_table(const std::string& text, int n = -1);

std::string to_binary_string(const BooleanFunction& f);
std::string to_hex_string(const BooleanFunction& f);

// "x1*x2 + x3 + 1"-style monomial list, highest degree first, ties in
// index-lexicographic order; "0" for the zero function.
std::string to_anf_string(const Anf& a);

}  // namespace bentforge
