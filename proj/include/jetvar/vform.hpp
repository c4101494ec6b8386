#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "jetvar/expr.hpp"
#include "jetvar/jet_space.hpp"
#include "jetvar/sections.hpp"

namespace jetvar {

/// Fibre covector d psi^field_index.
struct Covector {
  std::size_t field;
  MultiIndex index;

  bool operator==(const Covector&) const = default;
  std::strong_ordering operator<=>(const Covector& other) const {
    if (auto c = field <=> other.field; c != 0) return c;
    return index <=> other.index;
  }
};

/// Basis element dxi^I (x) dpsi^C of a term: strictly increasing axes and
/// strictly increasing covectors.
struct FormKey {
  std::vector<std::size_t> dx;
  std::vector<Covector> dpsi;

  bool operator==(const FormKey&) const = default;
  std::strong_ordering operator<=>(const FormKey& other) const;
};

/// Coefficients V^a_N of a prolonged vertical field, keyed by covector.
/// Covectors without an entry pair to zero.
using FieldCoefficients = std::map<Covector, Expr>;

/// Semi-basic form of horizontal degree d with values in the l-th exterior
/// power of the dual vertical bundle:
///
///   sum  c_{I,C} dxi^I (x) dpsi^C
///
/// The horizontal and contact factors antisymmetrize independently; there is
/// no sign when a horizontal covector passes a contact one. Coefficients are
/// kept canonical and zero terms are dropped.
///
/// coeff_order and contact_order are the order pair (s, r) of the form. They
/// start at the declared values and grow to cover whatever terms are added;
/// order_lift() raises them explicitly.
class VForm {
 public:
  VForm(JetSpacePtr space, int horiz_degree, int contact_degree, int coeff_order = 0,
        int contact_order = 0);

  /// f as a (0, 0) form.
  static VForm function(JetSpacePtr space, const Expr& f, int coeff_order = 0);
  /// L dxi^1 ^ ... ^ dxi^p.
  static VForm lagrangian(JetSpacePtr space, const Expr& density, int coeff_order = 0);

  const JetSpacePtr& space() const { return space_; }
  int horiz_degree() const { return horiz_degree_; }
  int contact_degree() const { return contact_degree_; }
  int coeff_order() const { return coeff_order_; }
  int contact_order() const { return contact_order_; }
  const std::map<FormKey, Expr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a canonical key, zero when absent.
  Expr coefficient(const FormKey& key) const;

  /// Adds coeff * dxi^dx (x) dpsi^dpsi. The covector lists may be in any
  /// order; they are sorted with the permutation sign, and a repeated
  /// covector makes the term vanish. Throws BidegreeMismatch on wrong list
  /// lengths.
  void add_term(std::vector<std::size_t> dx, std::vector<Covector> dpsi, const Expr& coeff);

  VForm& operator+=(const VForm& other);
  VForm& operator-=(const VForm& other);
  friend VForm operator+(VForm a, const VForm& b) { return a += b; }
  friend VForm operator-(VForm a, const VForm& b) { return a -= b; }
  friend VForm operator*(const Expr& scalar, const VForm& form);

  /// Same terms with a fresh, empty metadata floor (orders recomputed from
  /// the terms alone).
  VForm with_minimal_orders() const;

 private:
  void raise_orders_for(const FormKey& key, const Expr& coeff);

  JetSpacePtr space_;
  int horiz_degree_;
  int contact_degree_;
  int coeff_order_;
  int contact_order_;
  std::map<FormKey, Expr> terms_;
};

/// Exterior product: horizontal and contact factors wedge independently.
VForm wedge(const VForm& a, const VForm& b);

/// Interior product of a prolonged vertical field with the contact factor;
/// contact degree drops by one. Throws ZeroContactDegree on contact degree 0.
VForm contract(const FieldCoefficients& field, const VForm& form);

/// Raises the order pair to (coeff_order, contact_order); terms unchanged.
/// Throws OrderLowering if either target is below the current value.
VForm order_lift(const VForm& form, int coeff_order, int contact_order);

/// Substitutes the prolonged section into every coefficient. The contact
/// factor is kept as an inert value slot; the result has coeff_order 0.
VForm pull_back_section(const VForm& form, const SectionSym& section);

/// Exterior differential on the horizontal factor of a form whose
/// coefficients depend on the base only. Throws JetVariablePresent otherwise.
VForm base_exterior_d(const VForm& form);

/// Exact comparison after lifting both sides to common orders. Forms of
/// different bidegree are equal only if both are zero.
bool vform_eq(const VForm& a, const VForm& b);

/// i-th interior product of the volume form: (-1)^i dxi^0 ^ ... (omit i) ... (0-based axis).
/// Returned as the signed list of remaining axes; sign is +1 or -1.
struct HorizontalBasis {
  int sign;
  std::vector<std::size_t> axes;
};
HorizontalBasis volume_without(std::size_t p, std::size_t axis);

}  // namespace jetvar
