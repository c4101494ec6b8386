#include "jetvar/jetops.hpp"

#include <algorithm>
#include <string>

#include "jetvar/error.hpp"

namespace jetvar {

namespace {

int raised_contact_order(const VForm& form) {
  return form.contact_degree() > 0 ? form.contact_order() + 1 : form.contact_order();
}

}  // namespace

VForm total_derivative(const VForm& form, std::size_t axis) {
  VForm out(form.space(), form.horiz_degree(), form.contact_degree(), form.coeff_order() + 1,
            raised_contact_order(form));
  for (const auto& [key, c] : form.terms()) {
    out.add_term(key.dx, key.dpsi, total_derivative(c, axis));
    for (std::size_t k = 0; k < key.dpsi.size(); ++k) {
      auto dpsi = key.dpsi;
      dpsi[k].index = dpsi[k].index.shifted(axis, +1);
      out.add_term(key.dx, std::move(dpsi), c);
    }
  }
  return out;
}

VForm total_derivative(const VForm& form, const MultiIndex& index) {
  VForm out = form;
  for (std::size_t axis = 0; axis < index.dim(); ++axis)
    for (int k = 0; k < index[axis]; ++k) out = total_derivative(out, axis);
  return out;
}

VForm d_pi(JetSpacePtr space, const Expr& f, int order) {
  return d_pi(VForm::function(std::move(space), f, order));
}

VForm d_pi(const VForm& form) {
  VForm out(form.space(), form.horiz_degree(), form.contact_degree() + 1, form.coeff_order(),
            std::max(form.contact_order(), form.coeff_order()));
  for (const auto& [key, c] : form.terms()) {
    for (const auto& [field, index] : jet_variables(c)) {
      std::vector<Covector> dpsi{Covector{field, index}};
      dpsi.insert(dpsi.end(), key.dpsi.begin(), key.dpsi.end());
      out.add_term(key.dx, std::move(dpsi), partial_jet(c, field, index));
    }
  }
  return out;
}

VForm d_t(const VForm& form) {
  VForm out(form.space(), form.horiz_degree() + 1, form.contact_degree(), form.coeff_order() + 1,
            raised_contact_order(form));
  if (out.horiz_degree() > static_cast<int>(form.space()->p())) return out;
  for (std::size_t axis = 0; axis < form.space()->p(); ++axis) {
    const VForm derived = total_derivative(form, axis);
    for (const auto& [key, c] : derived.terms()) {
      std::vector<std::size_t> dx{axis};
      dx.insert(dx.end(), key.dx.begin(), key.dx.end());
      out.add_term(std::move(dx), key.dpsi, c);
    }
  }
  return out;
}

VForm iota(const VForm& form, std::size_t axis, IotaMode mode) {
  VForm out(form.space(), form.horiz_degree(), form.contact_degree(), form.coeff_order(),
            form.contact_order());
  for (const auto& [key, c] : form.terms()) {
    for (std::size_t k = 0; k < key.dpsi.size(); ++k) {
      const int count = key.dpsi[k].index[axis];
      if (count == 0) continue;
      auto dpsi = key.dpsi;
      dpsi[k].index = dpsi[k].index.shifted(axis, -1);
      out.add_term(key.dx, std::move(dpsi), mode == IotaMode::Weighted ? Expr(count) * c : c);
    }
  }
  return out;
}

VForm iota(const VForm& form, const MultiIndex& index, IotaMode mode) {
  VForm out = form;
  for (std::size_t axis = 0; axis < index.dim(); ++axis)
    for (int k = 0; k < index[axis]; ++k) out = iota(out, axis, mode);
  return out;
}

VForm degree_operator(const VForm& form) { return Expr(form.contact_degree()) * form; }

VForm operator_E(const VForm& lagrangian, IotaMode mode) {
  const auto p = static_cast<int>(lagrangian.space()->p());
  if (lagrangian.horiz_degree() != p || lagrangian.contact_degree() != 0)
    throw NotLagrangian("operator E needs a form of bidegree (" + std::to_string(p) + ",0)");
  const VForm fibre = d_pi(lagrangian);
  VForm out = degree_operator(fibre);
  for (const auto& index : enumerate_multi_indices(lagrangian.space()->p(), fibre.contact_order())) {
    if (index.order() == 0) continue;
    const VForm reduced = iota(fibre, index, mode);
    if (reduced.is_zero()) continue;
    Rational weight(index.order() % 2 == 0 ? 1 : -1);
    weight /= Rational(static_cast<unsigned long>(index.factorial()));
    out += Expr(weight) * total_derivative(reduced, index);
  }
  return out;
}

FieldCoefficients prolonged_coefficients(const VerticalFieldSym& field, int order) {
  FieldCoefficients out;
  const auto& space = *field.space();
  for (std::size_t a = 0; a < space.q(); ++a) {
    for (const auto& index : enumerate_multi_indices(space.p(), order)) {
      Expr value;
      if (index.order() == 0) {
        value = field.component(a);
      } else {
        // Any axis with a positive count works; the D_i commute.
        std::size_t axis = 0;
        while (index[axis] == 0) ++axis;
        value = total_derivative(out.at(Covector{a, index.shifted(axis, -1)}), axis);
      }
      out.emplace(Covector{a, index}, std::move(value));
    }
  }
  return out;
}

VForm lie_derivative_section(const VerticalFieldSym& variation, const VForm& beta,
                             const SectionSym& section) {
  if (beta.contact_degree() != 0)
    throw std::invalid_argument("Lie derivative along a section needs a semi-basic form");
  if (!variation.is_along_section())
    throw std::invalid_argument("variation along a section must depend on the base only");
  const VForm pulled = pull_back_section(d_pi(beta), section);
  return contract(prolonged_coefficients(variation, pulled.contact_order()), pulled);
}

}  // namespace jetvar
