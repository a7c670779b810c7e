#pragma once

#include <string>

#include "svol/poly.hpp"

namespace svol {

/// Parses the polynomial grammar used for inline metric entries and report
/// rendering:
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | variable | '(' expr ')'
///   rational := uint ('/' uint)?
///
/// Variable tokens are resolved against `table` (e.g. x1..xn). Whitespace is
/// insignificant. Throws parse_error with 1-based line/column on bad input.
Poly parse_poly(const std::string& text, const VarTablePtr& table, int degree_cap);

}  // namespace svol
