#pragma once

#include <string_view>

#include "ncball/ncalg/polynomial.hpp"
#include "ncball/ncalg/presentation.hpp"

namespace ncball::ncalg {

/// Parses the expression language
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ["'"] ['^' integer]
///   atom     := rational | 's' | 'q' | genname | '(' expr ')'
///   genname  := ('z'|'w'|'x'|'t'|'e'|'f') integer
///   rational := integer ['/' positive-integer]
///
/// with insignificant whitespace. A leading '-' is accepted on the first
/// term of an expression. Negative exponents are only allowed on scalar
/// monomials such as s or q.
///
/// Throws ParseError (with a 0-based character position) on malformed input
/// and Error(unknown_generator) for generators outside pres.
Polynomial parse_expression(std::string_view text, const Presentation& pres);

}  // namespace ncball::ncalg
