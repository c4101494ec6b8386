#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jetvar/expr.hpp"
#include "jetvar/jet_space.hpp"

namespace jetvar {

/// A section u^a(xi) of the fibred space: one component per field, each an
/// expression in the base coordinates. Components may contain opaque atoms,
/// which stand for unspecified functions and differentiate formally.
class SectionSym {
 public:
  /// Throws JetVariablePresent if a component references a jet coordinate,
  /// DimensionMismatch if the component count differs from q.
  SectionSym(JetSpacePtr space, std::vector<Expr> components);

  /// u^a = F_a with F_a an opaque atom named names[a].
  static SectionSym opaque(JetSpacePtr space, const std::vector<std::string>& names);

  const JetSpacePtr& space() const { return space_; }
  const std::vector<Expr>& components() const { return components_; }
  const Expr& component(std::size_t field) const { return components_.at(field); }

  /// d^N u^a / d xi^N, canonical.
  Expr derivative(std::size_t field, const MultiIndex& index) const;

 private:
  JetSpacePtr space_;
  std::vector<Expr> components_;
};

/// A vertical field v^a(xi, psi) on the order-0 space, or, when none of its
/// components mention the fibre, a variation y^a(xi) along a section.
class VerticalFieldSym {
 public:
  /// Throws JetVariablePresent if a component references psi^b_N with |N| > 0.
  VerticalFieldSym(JetSpacePtr space, std::vector<Expr> components);

  static VerticalFieldSym opaque(JetSpacePtr space, const std::vector<std::string>& names);

  const JetSpacePtr& space() const { return space_; }
  const std::vector<Expr>& components() const { return components_; }
  const Expr& component(std::size_t field) const { return components_.at(field); }

  /// True when no component depends on the fibre coordinates.
  bool is_along_section() const;

 private:
  JetSpacePtr space_;
  std::vector<Expr> components_;
};

}  // namespace jetvar
