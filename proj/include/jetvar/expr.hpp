#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jetvar/multiindex.hpp"
#include "jetvar/rational.hpp"

namespace jetvar {

enum class ExprKind : std::uint8_t {
  Constant,
  BaseVar,   // xi^i
  JetVar,    // psi^a_N
  Opaque,    // F[name, M](xi): an unspecified function of the base with formal derivative M
  Sum,
  Product,
  Power,     // integer exponent
  Function,
  Negate,
};

enum class FunctionKind : std::uint8_t { Sin, Cos, Exp, Ln };

const char* function_name(FunctionKind kind);

struct ExprNode;

/// Immutable symbolic expression over base coordinates, jet coordinates and
/// opaque function atoms. Copies share structure.
///
/// The factory functions apply only trivial rewrites (dropping exact zero
/// summands and unit factors, unwrapping single-operand sums and products);
/// everything else is left to canonicalize().
class Expr {
 public:
  /// The constant 0.
  Expr();
  Expr(int value);  // NOLINT: integer literals read naturally in formulas
  explicit Expr(Rational value);

  static Expr constant(Rational value);
  static Expr base(std::size_t axis);
  static Expr jet(std::size_t field, MultiIndex index);
  static Expr opaque(std::string name, MultiIndex index);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, int exponent);
  static Expr function(FunctionKind kind, Expr argument);
  static Expr negate(Expr operand);

  ExprKind kind() const;
  bool is_constant() const { return kind() == ExprKind::Constant; }
  bool is_atom() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& value() const;            // Constant
  std::size_t axis() const;                 // BaseVar
  std::size_t field() const;                // JetVar
  const MultiIndex& index() const;          // JetVar, Opaque
  const std::string& name() const;          // Opaque
  const std::vector<Expr>& operands() const;  // Sum, Product, Power, Function, Negate
  const Expr& operand() const { return operands().front(); }
  int exponent() const;                     // Power
  FunctionKind function_kind() const;       // Function

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  Expr& operator+=(const Expr& other) { return *this = *this + other; }
  Expr& operator-=(const Expr& other) { return *this = *this - other; }
  Expr& operator*=(const Expr& other) { return *this = *this * other; }

  /// Structural equality; use equivalent() for mathematical equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

Expr sin(Expr e);
Expr cos(Expr e);
Expr exp(Expr e);
Expr ln(Expr e);
Expr pow(Expr base, int exponent);

/// Structural total order. Atoms order as base variables < jet variables <
/// opaque atoms; jet variables by (field, multi-index order).
std::strong_ordering compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

/// Expanded sum-of-products normal form with rational coefficients. Terms
/// are listed in descending monomial order, factors inside a term in
/// ascending atom order. Transcendental subterms become atoms with
/// canonicalized arguments; powers of non-monomial sums with negative
/// exponents are kept as atoms. Idempotent.
Expr canonicalize(const Expr& e);

/// True when a - b canonicalizes to zero. Complete for the polynomial and
/// Laurent-monomial fragment, sound elsewhere.
bool equivalent(const Expr& a, const Expr& b);

}  // namespace jetvar
