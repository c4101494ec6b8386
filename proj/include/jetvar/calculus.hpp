#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jetvar/expr.hpp"
#include "jetvar/sections.hpp"

namespace jetvar {

/// d/d xi^axis treating every psi^a_N as an independent coordinate. Opaque
/// atoms F[M] differentiate to F[M + 1_axis]. Result is canonical.
Expr partial_base(const Expr& f, std::size_t axis);

/// d/d psi^field_index. Opaque atoms and base variables are constants here.
Expr partial_jet(const Expr& f, std::size_t field, const MultiIndex& index);

/// Total derivative D_axis f = df/dxi^axis + sum psi^a_{N+1_axis} df/dpsi^a_N.
Expr total_derivative(const Expr& f, std::size_t axis);

/// D_N f, applied axis by axis.
Expr total_derivative(const Expr& f, const MultiIndex& index);

/// Pull-back of a function along the prolonged section: psi^a_N becomes
/// d^N u^a. The result depends on the base coordinates (and opaque atoms)
/// only.
Expr subst_jets(const Expr& f, const SectionSym& section);

/// Replaces every jet variable by the expression `replace(field, N)`. Base
/// variables and opaque atoms are untouched. Result is canonical.
Expr substitute_jets(const Expr& f,
                     const std::function<Expr(std::size_t, const MultiIndex&)>& replace);

using JetVariable = std::pair<std::size_t, MultiIndex>;

/// Distinct jet variables of f, ordered by (field, multi-index order).
std::vector<JetVariable> jet_variables(const Expr& f);

/// Highest |N| among the jet variables of f; 0 when there are none.
int jet_order(const Expr& f);

bool has_jet_variables(const Expr& f);
bool has_opaque_atoms(const Expr& f);
bool has_base_variables(const Expr& f);

/// Values for base and jet coordinates at a single point.
class NumericPoint {
 public:
  NumericPoint() = default;
  explicit NumericPoint(std::vector<double> base_values);

  void set_base(std::size_t axis, double value);
  void set_jet(std::size_t field, const MultiIndex& index, double value);

  std::optional<double> base(std::size_t axis) const;
  std::optional<double> jet(std::size_t field, const MultiIndex& index) const;

 private:
  std::vector<std::optional<double>> base_;
  std::map<JetVariable, double> jets_;
};

/// Double-precision evaluation. Throws OpaqueAtomPresent, MissingAssignment,
/// or DomainError (log of a non-positive value, negative power of zero).
double eval_numeric(const Expr& f, const NumericPoint& point);

}  // namespace jetvar
