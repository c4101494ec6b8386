#pragma once

#include <string>

#include "jetvar/jetops.hpp"

namespace jetvar {

/// J_r(v) in coordinates: V^a_N = D_N v^a for |N| <= order.
class ProlongedField {
 public:
  ProlongedField(JetSpacePtr space, int order, FieldCoefficients coefficients);

  const JetSpacePtr& space() const { return space_; }
  int order() const { return order_; }
  const FieldCoefficients& coefficients() const { return coefficients_; }
  const Expr& coefficient(std::size_t field, const MultiIndex& index) const;

 private:
  JetSpacePtr space_;
  int order_;
  FieldCoefficients coefficients_;
};

ProlongedField prolong_vertical(const VerticalFieldSym& field, int order);

/// Drops the coefficients above `order`; throws std::invalid_argument when
/// `order` exceeds the field's order.
ProlongedField prolong_truncate(const ProlongedField& field, int order);

/// Which axis an integration-by-parts step peels off a multi-index.
enum class ReductionStrategy { MinAxis, MaxAxis };

const char* strategy_name(ReductionStrategy strategy);

/// d_pi(lambda) = epsilon + d_t(kappa), with epsilon concentrated on the
/// order-0 covectors.
struct DecompResult {
  VForm epsilon;
  VForm kappa;
  ReductionStrategy strategy;
  int lagrangian_order;
};

/// Integrand of the first variation: < {D_N y^a}, (j u)^* d_pi lambda >.
VForm first_variation(const VForm& lagrangian, const SectionSym& section,
                      const VerticalFieldSym& variation);

/// Constructive integration by parts. Every term c dpsi^a_N vol with |N| > 0
/// is rewritten, highest covector first, as
///   d_t(c dpsi^a_{N-1_i} (x) (d/dxi^i -| vol)) - D_i(c) dpsi^a_{N-1_i} vol
/// with i chosen by `strategy`. The identity is re-checked before returning;
/// a failure throws IdentityCheckFailed. Throws NotLagrangian unless the
/// argument has bidegree (p, 0).
DecompResult decompose(const VForm& lagrangian,
                       ReductionStrategy strategy = ReductionStrategy::MinAxis);

/// The density L of L dxi^1 ^ ... ^ dxi^p. Throws NotLagrangian.
Expr lagrangian_density(const VForm& lagrangian);

/// Direct formula sum_a [sum_N (-1)^{|N|} D_N(dL/dpsi^a_N)] dpsi^a (x) vol.
VForm euler_lagrange(const VForm& lagrangian);

/// < {D_N y^a}_{|N| <= r-1}, (j u)^* kappa >.
VForm green_operator(const VForm& kappa, const SectionSym& section,
                     const VerticalFieldSym& variation);

/// first_variation - <y, (j u)^* epsilon> - d(G(y)); zero when the Green
/// formula holds.
VForm green_identity_residual(const VForm& lagrangian, const SectionSym& section,
                              const VerticalFieldSym& variation,
                              ReductionStrategy strategy = ReductionStrategy::MinAxis);

}  // namespace jetvar
