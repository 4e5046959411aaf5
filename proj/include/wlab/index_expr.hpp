#pragma once

#include <string>

#include "wlab/bigint.hpp"

namespace wlab {

// Evaluates an index expression such as "p^4 - p^3 - 2" or "(p-1)*3 + 4" for a given p.
// Grammar: integers, the variable p, + - * ^, unary minus and parentheses; ^ binds tightest
// and is right-associative. InvalidInput on a syntax error or a negative or huge exponent.
BigInt eval_index_expr(const std::string& text, const BigInt& p);

}  // namespace wlab
