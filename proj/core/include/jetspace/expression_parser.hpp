#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jetspace/field_element.hpp"
#include "jetspace/series.hpp"

namespace jetspace {

/// Infix grammar shared by problem documents and reports:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Rational literals are written as quotients, e.g. 3/4. Identifiers must be
/// listed in `symbols`; anything else is a ParseError with a 1-based column.
FieldElement parse_expression(std::string_view text, BaseField field,
                              const std::vector<std::string>& symbols);

/// As parse_expression, but the result must be a polynomial.
SparsePolynomial parse_polynomial(std::string_view text, BaseField field,
                                  const std::vector<std::string>& symbols);

/// Name reserved for the series variable.
inline constexpr std::string_view series_variable = "t";

/// Parses a rational expression in t (plus `symbols`) and splits it into
/// t-coefficients. Throws DenominatorNotUnit if the denominator vanishes at
/// t = 0 after cancelling common powers of t.
SeriesExpression parse_series(std::string_view text, BaseField field,
                              const std::vector<std::string>& symbols);

}  // namespace jetspace
