#include "dunkl/builders.hpp"

#include <stdexcept>

namespace dunkl {

std::string to_string(Mutation m) {
  switch (m) {
  case Mutation::None:
    return "none";
  case Mutation::BShift:
    return "b-shift";
  case Mutation::DropRSummand:
    return "drop-r-summand";
  case Mutation::RScale:
    return "r-scale";
  case Mutation::SScale:
    return "s-scale";
  case Mutation::TrigShift:
    return "trig-shift";
  case Mutation::XPotential:
    return "x-potential";
  }
  return "none";
}

std::optional<Mutation> parse_mutation(const std::string& name) {
  for (Mutation m : {Mutation::None, Mutation::BShift, Mutation::DropRSummand, Mutation::RScale, Mutation::SScale,
                     Mutation::TrigShift, Mutation::XPotential})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

OpExpr build_R(const FieldPtr& ctx, Mutation mut) {
  OpExpr r = OpExpr::rot(ctx, 1);
  return mut == Mutation::RScale ? r.scaled(2) : r;
}

OpExpr build_I(const FieldPtr& ctx) { return OpExpr::refl(ctx); }

OpExpr build_S(const FieldPtr& ctx, Mutation mut) {
  const int k = ctx->k();
  if (k % 2 != 0) throw std::invalid_argument("S is defined for even k only (k=" + std::to_string(k) + ")");
  OpExpr s(ctx);
  for (int i = 0; i <= (k - 2) / 2; ++i) {
    OpExpr t = OpExpr::rot(ctx, 4 * i);
    s += (i == 0 && mut == Mutation::SScale) ? t.scaled(2) : t;
  }
  return s;
}

OpExpr rotation_sum(const FieldPtr& ctx, Mutation mut) {
  const int k = ctx->k();
  OpExpr s(ctx);
  for (int i = 0; i < k; ++i) {
    if (mut == Mutation::DropRSummand && i == k - 1) continue;
    s += OpExpr::rot(ctx, 2 * i);
  }
  return s;
}

OpExpr exchange_term(const FieldPtr& ctx, Mutation mut) {
  OpExpr ar_b = OpExpr::param_a(ctx) * OpExpr::rot(ctx, 1) + OpExpr::param_b(ctx);
  return ar_b * rotation_sum(ctx, mut) * OpExpr::refl(ctx);
}

OpExpr counterterm(const FieldPtr& ctx) {
  const OpExpr a = OpExpr::param_a(ctx);
  const OpExpr b = OpExpr::param_b(ctx);
  OpExpr inner = a * a + b * b + (a * b).scaled(2) * OpExpr::rot(ctx, 1);
  return (inner * rotation_sum(ctx)).scaled(ctx->k());
}

OpExpr build_Dr(const FieldPtr& ctx, Mutation mut) {
  return OpExpr::d_r(ctx) - OpExpr::r_power(ctx, -1) * exchange_term(ctx, mut);
}

OpExpr build_Dphi(const FieldPtr& ctx, Mutation mut) {
  const int k = ctx->k();
  const FieldCtx& f = *ctx;
  const OpExpr a = OpExpr::param_a(ctx);
  const OpExpr b = OpExpr::param_b(ctx);
  const OpExpr refl = OpExpr::refl(ctx);
  OpExpr d = OpExpr::d_phi(ctx);

  if (k % 2 == 1) {
    for (int i = 0; i < k; ++i)
      d += a * OpExpr::zrat(ctx, trig(TrigKind::TanShift, i, f)) * OpExpr::rot(ctx, k + 2 * i) * refl;
  } else {
    const ZRat tk = trig(TrigKind::TanK, f);
    const ZRat sk = trig(TrigKind::SecK, f);
    OpExpr bracket = OpExpr::zrat(ctx, tk + sk) * OpExpr::rot(ctx, 2 * k - 1) + OpExpr::zrat(ctx, tk - sk) * OpExpr::rot(ctx, 1);
    d += a * bracket * build_S(ctx) * refl;
  }
  for (int i = 0; i < k; ++i) {
    OpExpr bi = (i == 0 && mut == Mutation::BShift) ? b + OpExpr::identity(ctx) : b;
    d -= bi * OpExpr::zrat(ctx, trig(TrigKind::CotShift, i, f)) * OpExpr::rot(ctx, 2 * i) * refl;
  }
  return d;
}

namespace {

// k^2 [a(a-1) sec^2 k phi + b(b-1) csc^2 k phi]
OpExpr angular_potential(const FieldPtr& ctx, Mutation mut) {
  const int k = ctx->k();
  const OpExpr a = OpExpr::param_a(ctx);
  const OpExpr b = OpExpr::param_b(ctx);
  OpExpr aa = mut == Mutation::XPotential ? a * a : a * a - a;
  OpExpr pot = aa * OpExpr::zrat(ctx, trig(TrigKind::Sec2K, *ctx)) + (b * b - b) * OpExpr::zrat(ctx, trig(TrigKind::Csc2K, *ctx));
  return pot.scaled(k * k);
}

} // namespace

OpExpr build_Hk(const FieldPtr& ctx) {
  const OpExpr dr = OpExpr::d_r(ctx);
  const OpExpr dphi = OpExpr::d_phi(ctx);
  const OpExpr inv_r2 = OpExpr::r_power(ctx, -2);
  return -(dr * dr) - OpExpr::r_power(ctx, -1) * dr - inv_r2 * dphi * dphi +
         OpExpr::param_w2(ctx) * OpExpr::r_power(ctx, 2) + inv_r2 * angular_potential(ctx, Mutation::None);
}

OpExpr build_Xk(const FieldPtr& ctx, Mutation mut) {
  const OpExpr dphi = OpExpr::d_phi(ctx);
  return -(dphi * dphi) + angular_potential(ctx, mut);
}

OpSum extended_Hk_sum(const FieldPtr& ctx, HkForm form, Mutation mut) {
  const OpExpr dr = OpExpr::d_r(ctx);
  const OpExpr dphi_op = build_Dphi(ctx, mut);
  const OpExpr inv_r = OpExpr::r_power(ctx, -1);
  const OpExpr inv_r2 = OpExpr::r_power(ctx, -2);
  const OpExpr osc = OpExpr::param_w2(ctx) * OpExpr::r_power(ctx, 2);
  if (form == HkForm::ViaDphi) {
    return {
        {-(dr * dr)},
        {-(inv_r * dr)},
        {-inv_r2, dphi_op, dphi_op},
        {inv_r2 * counterterm(ctx)},
        {osc},
    };
  }
  const OpExpr d_r = build_Dr(ctx, mut);
  const OpExpr shift = -(inv_r * (OpExpr::identity(ctx) + exchange_term(ctx).scaled(2)));
  return {
      {-d_r, d_r},
      {shift, d_r},
      {-inv_r2, dphi_op, dphi_op},
      {osc},
  };
}

OpExpr build_extended_Hk(const FieldPtr& ctx, HkForm form, Mutation mut) {
  return normal_form(extended_Hk_sum(ctx, form, mut));
}

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names{"R", "I", "S", "Dr", "Dphi", "Hk", "HkExt", "Xk"};
  return names;
}

std::optional<OpExpr> named_operator(const std::string& name, const FieldPtr& ctx) {
  if (name == "R") return build_R(ctx);
  if (name == "I") return build_I(ctx);
  if (name == "S") return build_S(ctx);
  if (name == "Dr") return build_Dr(ctx);
  if (name == "Dphi") return build_Dphi(ctx);
  if (name == "Hk") return build_Hk(ctx);
  if (name == "HkExt") return build_extended_Hk(ctx);
  if (name == "Xk") return build_Xk(ctx);
  return std::nullopt;
}

} // namespace dunkl
