#pragma once

#include <string_view>

#include "jetvar/expr.hpp"
#include "jetvar/jet_space.hpp"

namespace jetvar {

/// Parses an expression over the identifiers of `space`.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary | '/' number)*
///   unary  := '-' unary | factor
///   factor := base ('^' '-'? integer)?
///   base   := number | ident | field '_' suffix | func '(' expr ')' | '(' expr ')'
///
/// A suffix is a run of coordinate names in any order (u_xy == u_yx),
/// resolved to derivative counts. Numbers are integers or decimals and are
/// read exactly.
///
/// Throws SyntaxError (with the character offset), UnknownIdentifier, or
/// OrderExceeded when a suffix is longer than space.max_order().
Expr parse_expr(std::string_view text, const JetSpace& space);

}  // namespace jetvar
