#include "jetvar/expr.hpp"

#include <stdexcept>
#include <utility>
#include <variant>

#include "expr_node.hpp"

namespace jetvar {

const char* function_name(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Sin: return "sin";
    case FunctionKind::Cos: return "cos";
    case FunctionKind::Exp: return "exp";
    case FunctionKind::Ln: return "ln";
  }
  return "?";
}

namespace {

const std::shared_ptr<const ExprNode>& zero_node() {
  static const auto node =
      std::make_shared<const ExprNode>(ExprNode{ExprKind::Constant, Rational(0)});
  return node;
}

const std::shared_ptr<const ExprNode>& one_node() {
  static const auto node =
      std::make_shared<const ExprNode>(ExprNode{ExprKind::Constant, Rational(1)});
  return node;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr::Expr(int value) : Expr(Rational(value)) {}

Expr::Expr(Rational value) {
  value.canonicalize();  // mpq_class(n, d) is not reduced on construction
  if (value == 0) {
    node_ = zero_node();
  } else if (value == 1) {
    node_ = one_node();
  } else {
    node_ = std::make_shared<const ExprNode>(ExprNode{ExprKind::Constant, std::move(value)});
  }
}

Expr Expr::constant(Rational value) { return Expr(std::move(value)); }

Expr Expr::base(std::size_t axis) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{ExprKind::BaseVar, axis}));
}

Expr Expr::jet(std::size_t field, MultiIndex index) {
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::JetVar, JetPayload{field, std::move(index)}}));
}

Expr Expr::opaque(std::string name, MultiIndex index) {
  if (name.empty()) throw std::invalid_argument("opaque atom needs a name");
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Opaque, OpaquePayload{std::move(name), std::move(index)}}));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> kept;
  kept.reserve(terms.size());
  for (auto& t : terms)
    if (!t.is_zero()) kept.push_back(std::move(t));
  if (kept.empty()) return Expr();
  if (kept.size() == 1) return kept.front();
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Sum, CompositePayload{std::move(kept)}}));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> kept;
  kept.reserve(factors.size());
  for (auto& f : factors) {
    if (f.is_zero()) return Expr();
    if (!f.is_one()) kept.push_back(std::move(f));
  }
  if (kept.empty()) return Expr(1);
  if (kept.size() == 1) return kept.front();
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Product, CompositePayload{std::move(kept)}}));
}

Expr Expr::power(Expr base, int exponent) {
  if (exponent == 1) return base;
  if (exponent == 0) return Expr(1);
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Power, CompositePayload{{std::move(base)}, exponent}}));
}

Expr Expr::function(FunctionKind kind, Expr argument) {
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Function, CompositePayload{{std::move(argument)}, 0, kind}}));
}

Expr Expr::negate(Expr operand) {
  if (operand.is_constant()) return Expr(Rational(-operand.value()));
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Negate, CompositePayload{{std::move(operand)}}}));
}

ExprKind Expr::kind() const { return node_->kind; }

bool Expr::is_atom() const {
  const auto k = kind();
  return k == ExprKind::BaseVar || k == ExprKind::JetVar || k == ExprKind::Opaque;
}

bool Expr::is_zero() const { return is_constant() && value() == 0; }
bool Expr::is_one() const { return is_constant() && value() == 1; }

const Rational& Expr::value() const { return std::get<Rational>(node_->data); }
std::size_t Expr::axis() const { return std::get<std::size_t>(node_->data); }
std::size_t Expr::field() const { return std::get<JetPayload>(node_->data).field; }

const MultiIndex& Expr::index() const {
  if (kind() == ExprKind::JetVar) return std::get<JetPayload>(node_->data).index;
  return std::get<OpaquePayload>(node_->data).index;
}

const std::string& Expr::name() const { return std::get<OpaquePayload>(node_->data).name; }

const std::vector<Expr>& Expr::operands() const {
  return std::get<CompositePayload>(node_->data).operands;
}

int Expr::exponent() const { return std::get<CompositePayload>(node_->data).exponent; }

FunctionKind Expr::function_kind() const {
  return std::get<CompositePayload>(node_->data).function;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, Expr::negate(b)}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator-(const Expr& a) { return Expr::negate(a); }

bool operator==(const Expr& a, const Expr& b) {
  return a.node_ == b.node_ || compare(a, b) == 0;
}

Expr sin(Expr e) { return Expr::function(FunctionKind::Sin, std::move(e)); }
Expr cos(Expr e) { return Expr::function(FunctionKind::Cos, std::move(e)); }
Expr exp(Expr e) { return Expr::function(FunctionKind::Exp, std::move(e)); }
Expr ln(Expr e) { return Expr::function(FunctionKind::Ln, std::move(e)); }
Expr pow(Expr base, int exponent) { return Expr::power(std::move(base), exponent); }

namespace {

int kind_rank(ExprKind k) {
  switch (k) {
    case ExprKind::Constant: return 0;
    case ExprKind::BaseVar: return 1;
    case ExprKind::JetVar: return 2;
    case ExprKind::Opaque: return 3;
    case ExprKind::Function: return 4;
    case ExprKind::Power: return 5;
    case ExprKind::Negate: return 6;
    case ExprKind::Product: return 7;
    case ExprKind::Sum: return 8;
  }
  return 9;
}

std::strong_ordering compare_operands(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering compare(const Expr& a, const Expr& b) {
  if (auto c = kind_rank(a.kind()) <=> kind_rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case ExprKind::Constant: {
      const int c = cmp(a.value(), b.value());
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case ExprKind::BaseVar:
      return a.axis() <=> b.axis();
    case ExprKind::JetVar:
      if (auto c = a.field() <=> b.field(); c != 0) return c;
      return a.index() <=> b.index();
    case ExprKind::Opaque:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.index() <=> b.index();
    case ExprKind::Function:
      if (auto c = a.function_kind() <=> b.function_kind(); c != 0) return c;
      return compare(a.operand(), b.operand());
    case ExprKind::Power:
      if (auto c = compare(a.operand(), b.operand()); c != 0) return c;
      return a.exponent() <=> b.exponent();
    case ExprKind::Negate:
    case ExprKind::Product:
    case ExprKind::Sum:
      return compare_operands(a.operands(), b.operands());
  }
  return std::strong_ordering::equal;
}

}  // namespace jetvar
