#pragma once

#include <cstddef>

#include "jetvar/calculus.hpp"
#include "jetvar/vform.hpp"

namespace jetvar {

/// How the order-reducing derivation acts on a contact covector:
///   Literal:  i^k dpsi^a_N = dpsi^a_{N-1_k}
///   Weighted: i^k dpsi^a_N = n_k dpsi^a_{N-1_k}
/// Both vanish when n_k = 0.
enum class IotaMode { Literal, Weighted };

/// D_axis as a degree-0 derivation on forms: coefficients by the function
/// rule, dpsi^a_N -> dpsi^a_{N+1_axis}, horizontal covectors untouched.
VForm total_derivative(const VForm& form, std::size_t axis);

/// D_N = D_1^{n_1} ... D_p^{n_p}.
VForm total_derivative(const VForm& form, const MultiIndex& index);

/// Fibre differential of a function of order `order`:
/// sum over psi^a_N of (df/dpsi^a_N) dpsi^a_N.
VForm d_pi(JetSpacePtr space, const Expr& f, int order = 0);

/// Fibre differential of a form; the new covector is wedged in front of the
/// contact factor. Basis covectors are closed.
VForm d_pi(const VForm& form);

/// Total differential sum_i dxi^i ^ D_i(form). Forms of top horizontal
/// degree map to zero.
VForm d_t(const VForm& form);

/// Order-reducing derivation along one axis (0-based).
VForm iota(const VForm& form, std::size_t axis, IotaMode mode);

/// i^N = (i^1)^{n_1} ... (i^p)^{n_p}.
VForm iota(const VForm& form, const MultiIndex& index, IotaMode mode);

/// Multiplies a form by its contact degree.
VForm degree_operator(const VForm& form);

/// E = deg o d_pi + sum_{|N|>0} (-1)^{|N|}/N! D_N i^N d_pi, with D_N the
/// full derivation on fibre forms. Throws NotLagrangian unless the argument
/// has bidegree (p, 0).
VForm operator_E(const VForm& lagrangian, IotaMode mode = IotaMode::Weighted);

/// D_N v^a for all |N| <= order, keyed by covector. Components of `field`
/// may depend on the base, opaque atoms and order-0 fibre coordinates.
FieldCoefficients prolonged_coefficients(const VerticalFieldSym& field, int order);

/// Lie derivative of a semi-basic form beta (contact degree 0) along a
/// variation y of the section: < {D_N y^a}, (j u)^* d_pi beta >. The result
/// is an ordinary form on the base.
VForm lie_derivative_section(const VerticalFieldSym& variation, const VForm& beta,
                             const SectionSym& section);

}  // namespace jetvar
