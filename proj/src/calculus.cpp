#include "jetvar/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "jetvar/error.hpp"

namespace jetvar {

namespace {

// Chain rule over the expression tree; `leaf` differentiates atoms.
template <typename LeafRule>
Expr derive(const Expr& e, const LeafRule& leaf) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return Expr();
    case ExprKind::BaseVar:
    case ExprKind::JetVar:
    case ExprKind::Opaque:
      return leaf(e);
    case ExprKind::Sum: {
      std::vector<Expr> terms;
      terms.reserve(e.operands().size());
      for (const auto& t : e.operands()) terms.push_back(derive(t, leaf));
      return Expr::sum(std::move(terms));
    }
    case ExprKind::Product: {
      const auto& factors = e.operands();
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        Expr dk = derive(factors[k], leaf);
        if (dk.is_zero()) continue;
        std::vector<Expr> prod = factors;
        prod[k] = std::move(dk);
        terms.push_back(Expr::product(std::move(prod)));
      }
      return Expr::sum(std::move(terms));
    }
    case ExprKind::Power: {
      Expr db = derive(e.operand(), leaf);
      if (db.is_zero()) return Expr();
      const int k = e.exponent();
      return Expr::product({Expr(k), Expr::power(e.operand(), k - 1), std::move(db)});
    }
    case ExprKind::Function: {
      const Expr& a = e.operand();
      Expr da = derive(a, leaf);
      if (da.is_zero()) return Expr();
      switch (e.function_kind()) {
        case FunctionKind::Sin: return cos(a) * da;
        case FunctionKind::Cos: return -(sin(a) * da);
        case FunctionKind::Exp: return e * da;
        case FunctionKind::Ln: return Expr::power(a, -1) * da;
      }
      return Expr();
    }
    case ExprKind::Negate:
      return Expr::negate(derive(e.operand(), leaf));
  }
  return Expr();
}

template <typename Visit>
void visit_atoms(const Expr& e, const Visit& visit) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return;
    case ExprKind::BaseVar:
    case ExprKind::JetVar:
    case ExprKind::Opaque:
      visit(e);
      return;
    default:
      for (const auto& op : e.operands()) visit_atoms(op, visit);
  }
}

Expr rebuild(const Expr& e, const std::function<Expr(std::size_t, const MultiIndex&)>& replace) {
  switch (e.kind()) {
    case ExprKind::Constant:
    case ExprKind::BaseVar:
    case ExprKind::Opaque:
      return e;
    case ExprKind::JetVar:
      return replace(e.field(), e.index());
    case ExprKind::Sum:
    case ExprKind::Product: {
      std::vector<Expr> ops;
      ops.reserve(e.operands().size());
      for (const auto& op : e.operands()) ops.push_back(rebuild(op, replace));
      return e.kind() == ExprKind::Sum ? Expr::sum(std::move(ops)) : Expr::product(std::move(ops));
    }
    case ExprKind::Power:
      return Expr::power(rebuild(e.operand(), replace), e.exponent());
    case ExprKind::Function:
      return Expr::function(e.function_kind(), rebuild(e.operand(), replace));
    case ExprKind::Negate:
      return Expr::negate(rebuild(e.operand(), replace));
  }
  return e;
}

}  // namespace

Expr partial_base(const Expr& f, std::size_t axis) {
  return canonicalize(derive(f, [axis](const Expr& atom) -> Expr {
    switch (atom.kind()) {
      case ExprKind::BaseVar: return Expr(atom.axis() == axis ? 1 : 0);
      case ExprKind::Opaque: return Expr::opaque(atom.name(), atom.index().shifted(axis, +1));
      default: return Expr();
    }
  }));
}

Expr partial_jet(const Expr& f, std::size_t field, const MultiIndex& index) {
  return canonicalize(derive(f, [&](const Expr& atom) -> Expr {
    if (atom.kind() == ExprKind::JetVar && atom.field() == field && atom.index() == index)
      return Expr(1);
    return Expr();
  }));
}

Expr total_derivative(const Expr& f, std::size_t axis) {
  return canonicalize(derive(f, [axis](const Expr& atom) -> Expr {
    switch (atom.kind()) {
      case ExprKind::BaseVar: return Expr(atom.axis() == axis ? 1 : 0);
      case ExprKind::JetVar: return Expr::jet(atom.field(), atom.index().shifted(axis, +1));
      case ExprKind::Opaque: return Expr::opaque(atom.name(), atom.index().shifted(axis, +1));
      default: return Expr();
    }
  }));
}

Expr total_derivative(const Expr& f, const MultiIndex& index) {
  Expr out = canonicalize(f);
  for (std::size_t axis = 0; axis < index.dim(); ++axis)
    for (int k = 0; k < index[axis]; ++k) out = total_derivative(out, axis);
  return out;
}

Expr substitute_jets(const Expr& f,
                     const std::function<Expr(std::size_t, const MultiIndex&)>& replace) {
  return canonicalize(rebuild(f, replace));
}

Expr subst_jets(const Expr& f, const SectionSym& section) {
  std::map<JetVariable, Expr> cache;
  return substitute_jets(f, [&](std::size_t field, const MultiIndex& index) -> Expr {
    auto key = JetVariable{field, index};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Expr d = section.derivative(field, index);
    cache.emplace(std::move(key), d);
    return d;
  });
}

std::vector<JetVariable> jet_variables(const Expr& f) {
  std::set<JetVariable> seen;
  visit_atoms(f, [&](const Expr& atom) {
    if (atom.kind() == ExprKind::JetVar) seen.emplace(atom.field(), atom.index());
  });
  return {seen.begin(), seen.end()};
}

int jet_order(const Expr& f) {
  int order = 0;
  visit_atoms(f, [&](const Expr& atom) {
    if (atom.kind() == ExprKind::JetVar) order = std::max(order, atom.index().order());
  });
  return order;
}

namespace {

bool has_atom_kind(const Expr& f, ExprKind kind) {
  bool found = false;
  visit_atoms(f, [&](const Expr& atom) { found = found || atom.kind() == kind; });
  return found;
}

}  // namespace

bool has_jet_variables(const Expr& f) { return has_atom_kind(f, ExprKind::JetVar); }
bool has_opaque_atoms(const Expr& f) { return has_atom_kind(f, ExprKind::Opaque); }
bool has_base_variables(const Expr& f) { return has_atom_kind(f, ExprKind::BaseVar); }

NumericPoint::NumericPoint(std::vector<double> base_values) {
  base_.assign(base_values.begin(), base_values.end());
}

void NumericPoint::set_base(std::size_t axis, double value) {
  if (axis >= base_.size()) base_.resize(axis + 1);
  base_[axis] = value;
}

void NumericPoint::set_jet(std::size_t field, const MultiIndex& index, double value) {
  jets_[JetVariable{field, index}] = value;
}

std::optional<double> NumericPoint::base(std::size_t axis) const {
  if (axis >= base_.size()) return std::nullopt;
  return base_[axis];
}

std::optional<double> NumericPoint::jet(std::size_t field, const MultiIndex& index) const {
  auto it = jets_.find(JetVariable{field, index});
  if (it == jets_.end()) return std::nullopt;
  return it->second;
}

double eval_numeric(const Expr& f, const NumericPoint& point) {
  switch (f.kind()) {
    case ExprKind::Constant:
      return f.value().get_d();
    case ExprKind::BaseVar: {
      auto v = point.base(f.axis());
      if (!v) throw MissingAssignment("no value for base coordinate " + std::to_string(f.axis() + 1));
      return *v;
    }
    case ExprKind::JetVar: {
      auto v = point.jet(f.field(), f.index());
      if (!v)
        throw MissingAssignment("no value for jet coordinate of field " +
                                std::to_string(f.field() + 1) + " at order " +
                                std::to_string(f.index().order()));
      return *v;
    }
    case ExprKind::Opaque:
      throw OpaqueAtomPresent("cannot evaluate opaque atom '" + f.name() + "'");
    case ExprKind::Sum: {
      double s = 0.0;
      for (const auto& t : f.operands()) s += eval_numeric(t, point);
      return s;
    }
    case ExprKind::Product: {
      double p = 1.0;
      for (const auto& t : f.operands()) p *= eval_numeric(t, point);
      return p;
    }
    case ExprKind::Power: {
      const double b = eval_numeric(f.operand(), point);
      if (b == 0.0 && f.exponent() < 0) throw DomainError("negative power of zero");
      return std::pow(b, f.exponent());
    }
    case ExprKind::Function: {
      const double a = eval_numeric(f.operand(), point);
      switch (f.function_kind()) {
        case FunctionKind::Sin: return std::sin(a);
        case FunctionKind::Cos: return std::cos(a);
        case FunctionKind::Exp: return std::exp(a);
        case FunctionKind::Ln:
          if (!(a > 0.0)) throw DomainError("ln of non-positive value " + std::to_string(a));
          return std::log(a);
      }
      return 0.0;
    }
    case ExprKind::Negate:
      return -eval_numeric(f.operand(), point);
  }
  return 0.0;
}

}  // namespace jetvar
