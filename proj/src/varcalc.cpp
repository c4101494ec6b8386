#include "jetvar/varcalc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "jetvar/error.hpp"

namespace jetvar {

ProlongedField::ProlongedField(JetSpacePtr space, int order, FieldCoefficients coefficients)
    : space_(std::move(space)), order_(order), coefficients_(std::move(coefficients)) {}

const Expr& ProlongedField::coefficient(std::size_t field, const MultiIndex& index) const {
  return coefficients_.at(Covector{field, index});
}

ProlongedField prolong_vertical(const VerticalFieldSym& field, int order) {
  return ProlongedField(field.space(), order, prolonged_coefficients(field, order));
}

ProlongedField prolong_truncate(const ProlongedField& field, int order) {
  if (order > field.order())
    throw std::invalid_argument("cannot truncate a prolongation of order " +
                                std::to_string(field.order()) + " to order " +
                                std::to_string(order));
  FieldCoefficients kept;
  for (const auto& [cov, c] : field.coefficients())
    if (cov.index.order() <= order) kept.emplace(cov, c);
  return ProlongedField(field.space(), order, std::move(kept));
}

const char* strategy_name(ReductionStrategy strategy) {
  return strategy == ReductionStrategy::MinAxis ? "min-axis" : "max-axis";
}

namespace {

std::vector<std::size_t> volume_axes(std::size_t p) {
  std::vector<std::size_t> axes(p);
  std::iota(axes.begin(), axes.end(), std::size_t{0});
  return axes;
}

void check_lagrangian(const VForm& lagrangian) {
  const auto p = static_cast<int>(lagrangian.space()->p());
  if (lagrangian.horiz_degree() != p || lagrangian.contact_degree() != 0)
    throw NotLagrangian("expected a form of bidegree (" + std::to_string(p) + ",0), got (" +
                        std::to_string(lagrangian.horiz_degree()) + "," +
                        std::to_string(lagrangian.contact_degree()) + ")");
}

std::size_t reduction_axis(const MultiIndex& index, ReductionStrategy strategy) {
  if (strategy == ReductionStrategy::MinAxis) {
    for (std::size_t axis = 0; axis < index.dim(); ++axis)
      if (index[axis] > 0) return axis;
  } else {
    for (std::size_t axis = index.dim(); axis-- > 0;)
      if (index[axis] > 0) return axis;
  }
  throw std::logic_error("no axis to reduce on a zero multi-index");
}

}  // namespace

Expr lagrangian_density(const VForm& lagrangian) {
  check_lagrangian(lagrangian);
  return lagrangian.coefficient(FormKey{volume_axes(lagrangian.space()->p()), {}});
}

VForm first_variation(const VForm& lagrangian, const SectionSym& section,
                      const VerticalFieldSym& variation) {
  check_lagrangian(lagrangian);
  return lie_derivative_section(variation, lagrangian, section);
}

DecompResult decompose(const VForm& lagrangian, ReductionStrategy strategy) {
  check_lagrangian(lagrangian);
  const auto& space = lagrangian.space();
  const std::size_t p = space->p();
  const int r = lagrangian.coeff_order();
  const auto vol = volume_axes(p);
  const VForm fibre = d_pi(lagrangian);

  std::map<Covector, Expr> pending;
  for (const auto& [key, c] : fibre.terms()) pending.emplace(key.dpsi.front(), c);

  VForm epsilon(space, static_cast<int>(p), 1, 2 * r, 0);
  VForm kappa(space, static_cast<int>(p) - 1, 1, std::max(2 * r - 1, 0), std::max(r - 1, 0));

  // Reductions only move weight to strictly lower covectors of the same
  // field, so the largest pending covector is final once reached.
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    const Covector cov = it->first;
    const Expr c = it->second;
    pending.erase(it);
    if (cov.index.order() == 0) {
      epsilon.add_term(vol, {cov}, c);
      continue;
    }
    const std::size_t axis = reduction_axis(cov.index, strategy);
    const Covector lower{cov.field, cov.index.shifted(axis, -1)};
    const auto boundary = volume_without(p, axis);
    kappa.add_term(boundary.axes, {lower}, Expr(boundary.sign) * c);

    Expr moved = canonicalize(-total_derivative(c, axis));
    auto [slot, inserted] = pending.try_emplace(lower, moved);
    if (!inserted) {
      slot->second = canonicalize(slot->second + moved);
      if (slot->second.is_zero()) pending.erase(slot);
    } else if (moved.is_zero()) {
      pending.erase(slot);
    }
  }

  if (!vform_eq(fibre, epsilon + d_t(kappa)))
    throw IdentityCheckFailed("d_pi(lambda) != epsilon + d_t(kappa) after integration by parts");
  return DecompResult{std::move(epsilon), std::move(kappa), strategy, r};
}

VForm euler_lagrange(const VForm& lagrangian) {
  const Expr density = lagrangian_density(lagrangian);
  const auto& space = lagrangian.space();
  const int r = std::max(lagrangian.coeff_order(), jet_order(density));
  VForm out(space, static_cast<int>(space->p()), 1, 2 * r, 0);
  const auto vol = volume_axes(space->p());
  for (const auto& [field, index] : jet_variables(density)) {
    Expr term = total_derivative(partial_jet(density, field, index), index);
    if (index.order() % 2 != 0) term = -term;
    out.add_term(vol, {Covector{field, MultiIndex(space->p())}}, term);
  }
  return out;
}

VForm green_operator(const VForm& kappa, const SectionSym& section,
                     const VerticalFieldSym& variation) {
  if (!variation.is_along_section())
    throw std::invalid_argument("variation along a section must depend on the base only");
  const VForm pulled = pull_back_section(kappa, section);
  return contract(prolonged_coefficients(variation, pulled.contact_order()), pulled);
}

VForm green_identity_residual(const VForm& lagrangian, const SectionSym& section,
                              const VerticalFieldSym& variation, ReductionStrategy strategy) {
  const VForm variation_integrand = first_variation(lagrangian, section, variation);
  const VForm epsilon = euler_lagrange(lagrangian);
  const VForm source =
      contract(prolonged_coefficients(variation, 0), pull_back_section(epsilon, section));
  const DecompResult parts = decompose(lagrangian, strategy);
  const VForm boundary = base_exterior_d(green_operator(parts.kappa, section, variation));
  return variation_integrand - source - boundary;
}

}  // namespace jetvar
