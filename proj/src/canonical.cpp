#include <map>
#include <utility>
#include <vector>

#include "jetvar/error.hpp"
#include "jetvar/expr.hpp"

namespace jetvar {

namespace {

struct Factor {
  Expr atom;
  int exponent;
};

// Factors in ascending atom order, no zero exponents.
using Monomial = std::vector<Factor>;

// Monomials compare from their largest factor down; the empty monomial (a
// constant) is the smallest.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (auto c = compare(ia->atom, ib->atom); c != 0) return c;
    if (auto c = ia->exponent <=> ib->exponent; c != 0) return c;
  }
  return a.size() <=> b.size();
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

using Terms = std::map<Monomial, Rational, MonomialLess>;

void accumulate(Terms& into, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    const auto c = compare(ia->atom, ib->atom);
    if (c < 0) {
      out.push_back(*ia++);
    } else if (c > 0) {
      out.push_back(*ib++);
    } else {
      const int e = ia->exponent + ib->exponent;
      if (e != 0) out.push_back({ia->atom, e});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) accumulate(out, multiply(ma, mb), ca * cb);
  return out;
}

Terms constant_terms(const Rational& c) {
  Terms t;
  accumulate(t, {}, c);
  return t;
}

Terms atom_terms(const Expr& atom, int exponent = 1) {
  Terms t;
  t.emplace(Monomial{{atom, exponent}}, Rational(1));
  return t;
}

Expr from_terms(const Terms& terms);
Terms to_terms(const Expr& e);

Terms power_terms(const Expr& base, int exponent) {
  Terms b = to_terms(base);
  if (exponent > 0) {
    Terms result = constant_terms(1);
    Terms square = b;
    unsigned k = static_cast<unsigned>(exponent);
    while (k != 0) {
      if (k & 1U) result = multiply(result, square);
      k >>= 1U;
      if (k != 0) square = multiply(square, square);
    }
    return result;
  }
  if (b.empty()) throw DomainError("negative power of zero");
  if (b.size() == 1) {
    const auto& [m, c] = *b.begin();
    Rational coeff = 1;
    for (int i = 0; i < -exponent; ++i) coeff /= c;
    Monomial inv;
    inv.reserve(m.size());
    for (const auto& f : m) inv.push_back({f.atom, f.exponent * exponent});
    Terms out;
    out.emplace(std::move(inv), coeff);
    return out;
  }
  // A negative power of a genuine sum stays opaque to the normal form.
  return atom_terms(from_terms(b), exponent);
}

Terms function_terms(FunctionKind kind, const Expr& argument) {
  Expr arg = canonicalize(argument);
  if (arg.is_zero()) {
    switch (kind) {
      case FunctionKind::Sin: return {};
      case FunctionKind::Cos:
      case FunctionKind::Exp: return constant_terms(1);
      case FunctionKind::Ln: break;
    }
  }
  if (kind == FunctionKind::Ln && arg.is_one()) return {};
  return atom_terms(Expr::function(kind, std::move(arg)));
}

Terms to_terms(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return constant_terms(e.value());
    case ExprKind::BaseVar:
    case ExprKind::JetVar:
    case ExprKind::Opaque:
      return atom_terms(e);
    case ExprKind::Sum: {
      Terms out;
      for (const auto& t : e.operands())
        for (const auto& [m, c] : to_terms(t)) accumulate(out, m, c);
      return out;
    }
    case ExprKind::Product: {
      Terms out = constant_terms(1);
      for (const auto& f : e.operands()) {
        out = multiply(out, to_terms(f));
        if (out.empty()) break;
      }
      return out;
    }
    case ExprKind::Power:
      return power_terms(e.operand(), e.exponent());
    case ExprKind::Function:
      return function_terms(e.function_kind(), e.operand());
    case ExprKind::Negate: {
      Terms out = to_terms(e.operand());
      for (auto& [m, c] : out) c = -c;
      return out;
    }
  }
  return {};
}

Expr from_terms(const Terms& terms) {
  std::vector<Expr> summands;
  summands.reserve(terms.size());
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<Expr> factors;
    factors.reserve(m.size() + 1);
    if (c != 1 || m.empty()) factors.push_back(Expr(c));
    for (const auto& f : m) factors.push_back(Expr::power(f.atom, f.exponent));
    summands.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(summands));
}

}  // namespace

Expr canonicalize(const Expr& e) {
  if (e.is_constant() || e.is_atom()) return e;
  return from_terms(to_terms(e));
}

bool equivalent(const Expr& a, const Expr& b) { return canonicalize(a - b).is_zero(); }

}  // namespace jetvar
