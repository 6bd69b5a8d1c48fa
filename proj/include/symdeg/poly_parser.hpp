#pragma once

#include "symdeg/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symdeg {

/// Parses sums of monomials such as "w0^2*w3^2 - 6*w0*w1*w2*w3 + 3/2*w1".
///
/// Grammar (whitespace-insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' digits)?
///   primary := digits ('/' digits)? | identifier | '(' expr ')'
///
/// Parenthesised sub-expressions are accepted so that factored inputs
/// expand on the way in. Throws ParseError carrying the byte offset.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Variable names for an input without an explicit --vars list.
/// When every identifier is <prefix><index> with one shared prefix the
/// result is prefix0..prefixK (K the largest index seen), otherwise the
/// distinct identifiers in sorted order.
std::vector<std::string> infer_variables(std::string_view text);

/// Comma separated rational coordinates, e.g. "0,1,-1/2,0".
PointQ parse_point(std::string_view text);

} // namespace symdeg
