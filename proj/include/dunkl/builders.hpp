#ifndef DUNKL_BUILDERS_HPP
#define DUNKL_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dunkl/opalgebra.hpp"

namespace dunkl {

/// Deliberate single-coefficient defects, used to show that a check is not
/// vacuous. Each one is consumed by the builder named in its comment.
enum class Mutation {
  None,
  BShift,       ///< D_phi: b -> b + 1 in the i = 0 cotangent term
  DropRSummand, ///< D_r: the i = k-1 summand of sum R^{2i} is omitted
  RScale,       ///< R is built as 2 R
  SScale,       ///< S: the i = 0 summand gets coefficient 2
  TrigShift,    ///< trig identities: the first left-hand term is taken at phi + pi/k
  XPotential,   ///< X_k: a(a-1) replaced by a^2
};

std::string to_string(Mutation m);
std::optional<Mutation> parse_mutation(const std::string& name);

enum class HkForm { ViaDphi, ViaDr };

OpExpr build_R(const FieldPtr& ctx, Mutation mut = Mutation::None);
OpExpr build_I(const FieldPtr& ctx);
/// S = sum_{i=0}^{(k-2)/2} R^{4i}; even k only.
OpExpr build_S(const FieldPtr& ctx, Mutation mut = Mutation::None);

/// sum_{i=0}^{k-1} R^{2i}
OpExpr rotation_sum(const FieldPtr& ctx, Mutation mut = Mutation::None);
/// (a R + b)(sum_i R^{2i}) I
OpExpr exchange_term(const FieldPtr& ctx, Mutation mut = Mutation::None);
/// k (a^2 + b^2 + 2ab R) sum_i R^{2i}
OpExpr counterterm(const FieldPtr& ctx);

OpExpr build_Dr(const FieldPtr& ctx, Mutation mut = Mutation::None);
OpExpr build_Dphi(const FieldPtr& ctx, Mutation mut = Mutation::None);
OpExpr build_Hk(const FieldPtr& ctx);
OpExpr build_Xk(const FieldPtr& ctx, Mutation mut = Mutation::None);

/// The extended Hamiltonian as an unevaluated sum of products.
OpSum extended_Hk_sum(const FieldPtr& ctx, HkForm form, Mutation mut = Mutation::None);
OpExpr build_extended_Hk(const FieldPtr& ctx, HkForm form = HkForm::ViaDphi, Mutation mut = Mutation::None);

/// Names accepted by named_operator: R, I, S, Dr, Dphi, Hk, HkExt, Xk.
const std::vector<std::string>& operator_names();
std::optional<OpExpr> named_operator(const std::string& name, const FieldPtr& ctx);

} // namespace dunkl

#endif // DUNKL_BUILDERS_HPP
