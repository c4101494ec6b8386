#pragma once

#include <string>
#include <variant>
#include <vector>

#include "jetvar/expr.hpp"

namespace jetvar {

struct JetPayload {
  std::size_t field;
  MultiIndex index;
};

struct OpaquePayload {
  std::string name;
  MultiIndex index;
};

struct CompositePayload {
  std::vector<Expr> operands;
  int exponent = 0;
  FunctionKind function = FunctionKind::Sin;
};

struct ExprNode {
  ExprKind kind;
  std::variant<Rational, std::size_t, JetPayload, OpaquePayload, CompositePayload> data;
};

}  // namespace jetvar
