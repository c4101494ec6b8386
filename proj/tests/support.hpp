// Seeded generators shared by the property tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "jetvar/jetvar.hpp"

namespace jetvar {
/// Readable form values in test failure messages.
inline void PrintTo(const VForm& f, std::ostream* os) { *os << render_text(f); }
}  // namespace jetvar

namespace jetvar::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Nonzero rational n/d with |n| <= 5, 1 <= d <= 3.
inline Rational random_rational(Rng& rng) {
  int n = 0;
  while (n == 0) n = uniform_int(rng, -5, 5);
  return Rational(n, uniform_int(rng, 1, 3));
}

/// Multi-index of exactly the given order.
inline MultiIndex random_index(Rng& rng, std::size_t p, int order) {
  std::vector<int> counts(p, 0);
  for (int k = 0; k < order; ++k) ++counts[rng() % p];
  return MultiIndex(counts);
}

inline Expr random_jet(Rng& rng, const JetSpace& space, int max_order) {
  const int order = uniform_int(rng, 0, max_order);
  return Expr::jet(rng() % space.q(), random_index(rng, space.p(), order));
}

/// Polynomial in base and jet coordinates: `terms` monomials of total degree
/// 1..max_degree, each factor a jet of order <= max_order or (sometimes) a
/// base coordinate. At least one factor of order exactly max_order appears.
inline Expr random_polynomial(Rng& rng, const JetSpace& space, int max_order, int max_degree,
                              int terms) {
  std::vector<Expr> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<Expr> factors{Expr(random_rational(rng))};
    const int degree = uniform_int(rng, 1, max_degree);
    for (int k = 0; k < degree; ++k) {
      if (t == 0 && k == 0) {
        factors.push_back(Expr::jet(rng() % space.q(), random_index(rng, space.p(), max_order)));
      } else if (rng() % 5 == 0) {
        factors.push_back(Expr::base(rng() % space.p()));
      } else {
        factors.push_back(random_jet(rng, space, max_order));
      }
    }
    out.push_back(Expr::product(std::move(factors)));
  }
  return canonicalize(Expr::sum(std::move(out)));
}

/// Lagrangian of order exactly r (p, q given by the space).
inline VForm random_lagrangian(Rng& rng, const JetSpacePtr& space, int r, int max_degree = 3,
                               int terms = 3) {
  Expr density;
  do {
    density = random_polynomial(rng, *space, r, max_degree, terms);
  } while (jet_order(density) != r);
  return VForm::lagrangian(space, density, r);
}

inline std::vector<std::string> axis_names(std::size_t p) {
  const char* names[] = {"x", "y", "z"};
  return {names, names + p};
}

inline JetSpacePtr space_for(std::size_t p, std::size_t q = 1, int max_order = 8) {
  std::vector<std::string> fields = {"u", "v", "w"};
  fields.resize(q);
  return JetSpace::make(axis_names(p), fields, max_order);
}

inline std::vector<Covector> random_covectors(Rng& rng, const JetSpace& space, int count,
                                              int max_order) {
  std::vector<Covector> out;
  for (int k = 0; k < count; ++k)
    out.push_back(Covector{rng() % space.q(),
                           random_index(rng, space.p(), uniform_int(rng, 0, max_order))});
  return out;
}

inline std::vector<std::size_t> random_axes(Rng& rng, std::size_t p, int d) {
  std::vector<std::size_t> all(p);
  for (std::size_t i = 0; i < p; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(d));
  return all;
}

/// Random form of bidegree (d, l) with a few terms of order <= max_order.
inline VForm random_vform(Rng& rng, const JetSpacePtr& space, int d, int l, int max_order,
                          int terms = 3) {
  VForm out(space, d, l);
  for (int t = 0; t < terms; ++t)
    out.add_term(random_axes(rng, space->p(), d), random_covectors(rng, *space, l, max_order),
                 random_polynomial(rng, *space, max_order, 2, 2));
  return out;
}

/// Closed-form expression in the base coordinates: a small polynomial times
/// (or plus) trigonometric factors, exactly differentiable.
inline Expr random_base_function(Rng& rng, std::size_t p) {
  std::vector<Expr> terms;
  const int count = uniform_int(rng, 1, 3);
  for (int t = 0; t < count; ++t) {
    std::vector<Expr> f{Expr(random_rational(rng))};
    const std::size_t axis = rng() % p;
    switch (rng() % 4) {
      case 0: f.push_back(sin(Expr(uniform_int(rng, 1, 2)) * Expr::base(axis))); break;
      case 1: f.push_back(cos(Expr::base(axis))); break;
      case 2: f.push_back(pow(Expr::base(axis), uniform_int(rng, 1, 3))); break;
      default: f.push_back(exp(Expr::base(axis))); break;
    }
    if (rng() % 3 == 0) f.push_back(Expr::base(rng() % p));
    terms.push_back(Expr::product(std::move(f)));
  }
  return canonicalize(Expr::sum(std::move(terms)));
}

inline SectionSym random_section(Rng& rng, const JetSpacePtr& space) {
  std::vector<Expr> c;
  for (std::size_t a = 0; a < space->q(); ++a) c.push_back(random_base_function(rng, space->p()));
  return SectionSym(space, std::move(c));
}

inline VerticalFieldSym random_variation(Rng& rng, const JetSpacePtr& space) {
  std::vector<Expr> c;
  for (std::size_t a = 0; a < space->q(); ++a) c.push_back(random_base_function(rng, space->p()));
  return VerticalFieldSym(space, std::move(c));
}

/// Vertical field with components polynomial in base and order-0 fibre
/// coordinates.
inline VerticalFieldSym random_vertical_field(Rng& rng, const JetSpacePtr& space) {
  std::vector<Expr> c;
  for (std::size_t a = 0; a < space->q(); ++a) c.push_back(random_polynomial(rng, *space, 0, 2, 2));
  return VerticalFieldSym(space, std::move(c));
}

/// Random expression tree over the space (no opaque atoms) for round trips:
/// sums, products, small integer powers (including negative), functions.
inline Expr random_expr(Rng& rng, const JetSpace& space, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    switch (rng() % 3) {
      case 0: return Expr(random_rational(rng));
      case 1: return Expr::base(rng() % space.p());
      default: return random_jet(rng, space, 2);
    }
  }
  // Operands are drawn in sequence so the tree does not depend on the
  // compiler's evaluation order.
  const auto kind = rng() % 6;
  const Expr a = random_expr(rng, space, depth - 1);
  switch (kind) {
    case 0:
    case 1: {
      const Expr b = random_expr(rng, space, depth - 1);
      return a + b;
    }
    case 2: {
      const Expr b = random_expr(rng, space, depth - 1);
      return a * b;
    }
    case 3: return pow(a, uniform_int(rng, -2, 3));
    case 4: {
      const FunctionKind kinds[] = {FunctionKind::Sin, FunctionKind::Cos, FunctionKind::Exp};
      return Expr::function(kinds[rng() % 3], a);
    }
    default: {
      const Expr b = random_expr(rng, space, depth - 1);
      return a - b;
    }
  }
}

/// Opaque section/variation named U_<field> / Y_<field>.
inline SectionSym opaque_section(const JetSpacePtr& space) {
  std::vector<std::string> names;
  for (const auto& f : space->field_names()) names.push_back("U_" + f);
  return SectionSym::opaque(space, names);
}

inline VerticalFieldSym opaque_variation(const JetSpacePtr& space) {
  std::vector<std::string> names;
  for (const auto& f : space->field_names()) names.push_back("Y_" + f);
  return VerticalFieldSym::opaque(space, names);
}

}  // namespace jetvar::testing
