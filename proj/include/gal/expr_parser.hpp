#pragma once

#include <set>
#include <string>
#include <string_view>

#include "gal/multipoly.hpp"

namespace gal {

/// Grading variables that are always accepted by the parser.
inline const std::set<std::string> kGradingVariables = {"i", "l", "m", "n"};

/// Parses a polynomial expression.
///
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" NAT)?
///   atom   := RATIONAL | IDENT | "(" expr ")" | "-" atom
///   RATIONAL := INT ("/" POSINT)?
///
/// There is no division operator: the slash only appears inside rational
/// literals. Unary minus applies to an atom, so "-x^2" is (-x)^2 and
/// "-(x^2)" is its negation. Identifiers must be grading variables or
/// members of `allowed_params`.
///
/// Throws ParseError carrying a 1-based byte offset.
MultiPoly parse_expression(std::string_view text, const std::set<std::string>& allowed_params = {});

/// Deterministic canonical text; `parse_expression(format_canonical(p)) == p`.
/// Terms follow GrlexDescending; the zero polynomial prints as "0".
std::string format_canonical(const MultiPoly& p);

/// True iff `name` is an ASCII letter followed by letters or digits.
bool is_identifier(std::string_view name);

}  // namespace gal
