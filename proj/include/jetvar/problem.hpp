#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "jetvar/expr.hpp"
#include "jetvar/jet_space.hpp"
#include "jetvar/vform.hpp"

namespace jetvar {

/// Parsed problem file.
///
///   base 1
///   coords x
///   field u
///   order 1
///   lagrangian (1/2)*u_x^2 - (1/2)*u^2
///   section u = sin(x)
///   variation u = cos(x)
///   grid 64
///   fd_step 1e-5
///   seed 42
///
/// `coords` may be omitted (x, y, z for p <= 3, else x1..xp); `base` may be
/// omitted when `coords` is given. `field` takes one or more names and may be
/// repeated. Everything after '#' is a comment.
struct ProblemFile {
  JetSpacePtr space;
  int order = 0;
  std::string lagrangian_text;
  Expr lagrangian_density;
  std::map<std::size_t, Expr> sections;    // by field index
  std::map<std::size_t, Expr> variations;  // by field index
  std::optional<std::size_t> grid;
  std::optional<double> fd_step;
  std::optional<std::uint64_t> seed;

  VForm lagrangian() const;
};

/// Throws SyntaxError carrying the 1-based line number for malformed lines,
/// unknown directives, bad expressions and missing required directives;
/// OrderMismatch when the Lagrangian references jets above the declared
/// order; DuplicateName for repeated or reserved identifiers. Messages of the
/// latter two also start with "line N:".
ProblemFile parse_problem_file(std::string_view text);

}  // namespace jetvar
