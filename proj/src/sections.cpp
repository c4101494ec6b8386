#include "jetvar/sections.hpp"

#include "jetvar/calculus.hpp"
#include "jetvar/error.hpp"

namespace jetvar {

namespace {

void check_component_count(const JetSpace& space, std::size_t n) {
  if (n != space.q())
    throw DimensionMismatch("expected " + std::to_string(space.q()) + " components, got " +
                            std::to_string(n));
}

std::vector<Expr> opaque_components(const JetSpace& space, const std::vector<std::string>& names) {
  check_component_count(space, names.size());
  std::vector<Expr> out;
  for (const auto& n : names) out.push_back(Expr::opaque(n, MultiIndex(space.p())));
  return out;
}

}  // namespace

SectionSym::SectionSym(JetSpacePtr space, std::vector<Expr> components)
    : space_(std::move(space)), components_(std::move(components)) {
  check_component_count(*space_, components_.size());
  for (auto& c : components_) {
    if (has_jet_variables(c))
      throw JetVariablePresent("section components must depend on the base coordinates only");
    c = canonicalize(c);
  }
}

SectionSym SectionSym::opaque(JetSpacePtr space, const std::vector<std::string>& names) {
  auto comps = opaque_components(*space, names);
  return SectionSym(std::move(space), std::move(comps));
}

Expr SectionSym::derivative(std::size_t field, const MultiIndex& index) const {
  Expr out = component(field);
  for (std::size_t axis = 0; axis < index.dim(); ++axis)
    for (int k = 0; k < index[axis]; ++k) out = partial_base(out, axis);
  return out;
}

VerticalFieldSym::VerticalFieldSym(JetSpacePtr space, std::vector<Expr> components)
    : space_(std::move(space)), components_(std::move(components)) {
  check_component_count(*space_, components_.size());
  for (auto& c : components_) {
    if (jet_order(c) > 0)
      throw JetVariablePresent("vertical field components may only use order-0 fibre coordinates");
    c = canonicalize(c);
  }
}

VerticalFieldSym VerticalFieldSym::opaque(JetSpacePtr space,
                                          const std::vector<std::string>& names) {
  auto comps = opaque_components(*space, names);
  return VerticalFieldSym(std::move(space), std::move(comps));
}

bool VerticalFieldSym::is_along_section() const {
  for (const auto& c : components_)
    if (has_jet_variables(c)) return false;
  return true;
}

}  // namespace jetvar
