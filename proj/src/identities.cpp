#include "dunkl/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace dunkl {

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skipped:
    return "skipped";
  }
  return "skipped";
}

namespace {

enum class Parity { Any, Odd, Even, OnlyK3, OnlyK2 };

bool admits(Parity p, int k) {
  switch (p) {
  case Parity::Any:
    return true;
  case Parity::Odd:
    return k % 2 == 1;
  case Parity::Even:
    return k % 2 == 0;
  case Parity::OnlyK3:
    return k == 3;
  case Parity::OnlyK2:
    return k == 2;
  }
  return false;
}

// Shorthands over one field context.
struct Ops {
  FieldPtr c;
  int k;

  OpExpr one() const { return OpExpr::identity(c); }
  OpExpr num(const Rational& q) const { return OpExpr::scalar(c, q); }
  OpExpr R(int n = 1) const { return OpExpr::rot(c, n); }
  OpExpr I() const { return OpExpr::refl(c); }
  OpExpr a() const { return OpExpr::param_a(c); }
  OpExpr b() const { return OpExpr::param_b(c); }
  OpExpr w2() const { return OpExpr::param_w2(c); }
  OpExpr r(int m) const { return OpExpr::r_power(c, m); }
  OpExpr dr() const { return OpExpr::d_r(c); }
  OpExpr dphi() const { return OpExpr::d_phi(c); }
  ZRat t(TrigKind kind, int j = 0) const { return trig(kind, j, *c); }
  OpExpr f(TrigKind kind, int j = 0) const { return OpExpr::zrat(c, t(kind, j)); }
  OpExpr f(const ZRat& z) const { return OpExpr::zrat(c, z); }

  // sum_{i<k} R^{2i}
  OpExpr even_rotations() const {
    OpExpr s(c);
    for (int i = 0; i < k; ++i) s += R(2 * i);
    return s;
  }
  OpExpr S() const {
    OpExpr s(c);
    for (int i = 0; 2 * i <= k - 2; ++i) s += R(4 * i);
    return s;
  }
  // k (a^2 + b^2 + 2ab R) sum R^{2i}, as a two-factor word
  OpWord counterterm() const {
    return {(a() * a() + b() * b() + (a() * b()).scaled(2) * R()).scaled(k), even_rotations()};
  }
};

double sec2(double x) { return 1.0 / (std::cos(x) * std::cos(x)); }
double csc2(double x) { return 1.0 / (std::sin(x) * std::sin(x)); }
double cot(double x) { return std::cos(x) / std::sin(x); }

// Sum over i < k of term(i), where the mutated first summand uses shift 1.
ZRat shifted_sum(const Ops& o, Mutation mut, const std::function<ZRat(int)>& term) {
  ZRat s(*o.c);
  for (int i = 0; i < o.k; ++i) s += term(i == 0 && mut == Mutation::TrigShift ? 1 : i);
  return s;
}

std::function<double(double)> shifted_sum_num(int k, Mutation mut, std::function<double(double, int)> term) {
  return [k, mut, term](double phi) {
    double s = 0;
    for (int i = 0; i < k; ++i) s += term(phi, i == 0 && mut == Mutation::TrigShift ? 1 : i);
    return s;
  };
}

std::function<double(double)> constant_num(double v) {
  return [v](double) { return v; };
}

// ---------------------------------------------------------------------------
// Operator checks

void group_relations(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr R = build_R(o.c, mut);
  const OpExpr I = build_I(o.c);
  OpWord r2k(static_cast<std::size_t>(2 * o.k), R);
  OpWord r2k1(static_cast<std::size_t>(2 * o.k - 1), R);
  cc.ops.push_back({"R^(2k) = 1", {r2k}, {{o.one()}}});
  cc.ops.push_back({"I^2 = 1", {{I, I}}, {{o.one()}}});
  cc.ops.push_back({"I R = R^(2k-1) I", {{I, R}}, {concat(r2k1, {I})}});
  cc.ops.push_back({"R^+ = R^(2k-1)", {{R}}, {r2k1}, true});
  cc.ops.push_back({"I^+ = I", {{I}}, {{I}}, true});
}

void dr_props(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dr = build_Dr(o.c, mut);
  const OpExpr G = exchange_term(o.c);
  cc.ops.push_back({"Dr^+ = -Dr - r^-1 (1 + 2G)", {{Dr}}, {{-Dr}, {-o.r(-1), o.one() + G.scaled(2)}}, true});
  cc.ops.push_back({"R Dr = Dr R", {{o.R(), Dr}}, {{Dr, o.R()}}});
  cc.ops.push_back({"I Dr = Dr I", {{o.I(), Dr}}, {{Dr, o.I()}}});
}

void dphi_props(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dp = build_Dphi(o.c, mut);
  cc.ops.push_back({"Dphi^+ = -Dphi", {{Dp}}, {{-Dp}}, true});
  cc.ops.push_back({"R Dphi = Dphi R", {{o.R(), Dp}}, {{Dp, o.R()}}});
  cc.ops.push_back({"I Dphi = -Dphi I", {{o.I(), Dp}}, {{-Dp, o.I()}}});
}

void dr_dphi_commutator(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dr = build_Dr(o.c, mut);
  const OpExpr Dp = build_Dphi(o.c, mut);
  const OpSum lhs{{Dr, Dp}, {-Dp, Dr}};
  cc.ops.push_back({"[Dr, Dphi] = -2/r G Dphi", lhs, {{o.r(-1).scaled(-2), exchange_term(o.c), Dp}}});
  if (o.k == 3) {
    const OpExpr g3 = (o.a() * o.R() + o.b()) * (o.one() + o.R(2) + o.R(4)) * o.I();
    cc.ops.push_back({"[Dr, Dphi] at k=3", lhs, {{o.r(-1).scaled(-2), g3, Dp}}});
  }
}

// D_phi^2 expanded with sec^2/csc^2 weights, odd k.
OpSum dphi_squared_odd(const Ops& o) {
  OpSum s{{o.dphi(), o.dphi()}};
  for (int i = 0; i < o.k; ++i) {
    s.push_back({-o.f(TrigKind::Sec2Shift, i), o.a(), o.a() - o.R(o.k + 2 * i) * o.I()});
    s.push_back({-o.f(TrigKind::Csc2Shift, i), o.b(), o.b() - o.R(2 * i) * o.I()});
  }
  s.push_back(o.counterterm());
  return s;
}

OpSum dphi_squared_even(const Ops& o) {
  const OpExpr S = o.S();
  OpSum s{{o.dphi(), o.dphi()}};
  s.push_back({-o.f(TrigKind::HalfDiffInv2).scaled(o.k), S, o.a(), o.a() - o.R(2 * o.k - 1) * o.I()});
  s.push_back({-o.f(TrigKind::HalfSumInv2).scaled(o.k), S, o.a(), o.a() - o.R() * o.I()});
  for (int i = 0; i < o.k; ++i) s.push_back({-o.f(TrigKind::Csc2Shift, i), o.b(), o.b() - o.R(2 * i) * o.I()});
  s.push_back(o.counterterm());
  return s;
}

// The k = 3 display, every coefficient spelled out.
OpSum dphi_squared_k3(const Ops& o) {
  const OpExpr a = o.a(), b = o.b(), I = o.I();
  return {
      {o.dphi(), o.dphi()},
      {-o.f(TrigKind::Sec2Shift, 0), a, a - o.R(3) * I},
      {-o.f(TrigKind::Sec2Shift, 1), a, a - o.R(5) * I},
      {-o.f(TrigKind::Sec2Shift, 2), a, a - o.R(1) * I},
      {-o.f(TrigKind::Csc2Shift, 0), b, b - I},
      {-o.f(TrigKind::Csc2Shift, 1), b, b - o.R(2) * I},
      {-o.f(TrigKind::Csc2Shift, 2), b, b - o.R(4) * I},
      {o.num(3), a * a + b * b + (a * b).scaled(2) * o.R(), o.one() + o.R(2) + o.R(4)},
  };
}

// The k = 2 display: sec^2 phi = csc^2(phi + pi/2) and 1/(cos -+ sin)^2 at k = 2.
OpSum dphi_squared_k2(const Ops& o) {
  const OpExpr a = o.a(), b = o.b(), I = o.I();
  return {
      {o.dphi(), o.dphi()},
      {-o.f(TrigKind::HalfDiffInv2).scaled(2), a, a - o.R(3) * I},
      {-o.f(TrigKind::HalfSumInv2).scaled(2), a, a - o.R(1) * I},
      {-o.f(TrigKind::Sec2Shift, 0), b, b - o.R(2) * I},
      {-o.f(TrigKind::Csc2Shift, 0), b, b - I},
      {o.num(2), a * a + b * b + (a * b).scaled(2) * o.R(), o.one() + o.R(2)},
  };
}

void dphi_squared(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dp = build_Dphi(o.c, mut);
  const OpSum lhs{{Dp, Dp}};
  if (o.k % 2 == 1)
    cc.ops.push_back({"Dphi^2 expansion (odd k)", lhs, dphi_squared_odd(o)});
  else
    cc.ops.push_back({"Dphi^2 expansion (even k)", lhs, dphi_squared_even(o)});
  if (o.k == 3) cc.ops.push_back({"Dphi^2 display at k=3", lhs, dphi_squared_k3(o)});
}

void s_props(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr S = build_S(o.c, mut);
  cc.ops.push_back({"R S = S R", {{o.R(), S}}, {{S, o.R()}}});
  cc.ops.push_back({"R^4 S = S", {{o.R(4), S}}, {{S}}});
  cc.ops.push_back({"S^2 = k/2 S", {{S, S}}, {{o.num(Rational(o.k, 2)), S}}});
  cc.ops.push_back({"I S = S I", {{o.I(), S}}, {{S, o.I()}}});
  cc.ops.push_back({"S^+ = S", {{S}}, {{S}}, true});
}

void hk_two_forms(const Ops& o, Mutation mut, CheckCase& cc) {
  cc.ops.push_back({"Hk via Dphi = Hk via Dr", extended_Hk_sum(o.c, HkForm::ViaDphi, mut),
                    extended_Hk_sum(o.c, HkForm::ViaDr, mut)});
}

void hk_invariance(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpSum h = extended_Hk_sum(o.c, HkForm::ViaDphi, mut);
  cc.ops.push_back({"R Hk = Hk R", times(OpWord{o.R()}, h), times(h, OpWord{o.R()})});
  cc.ops.push_back({"I Hk = Hk I", times(OpWord{o.I()}, h), times(h, OpWord{o.I()})});
}

void hk_projection(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpSum hk{{build_Hk(o.c)}};
  cc.ops.push_back({"pi(Hk via Dphi) = H_k", extended_Hk_sum(o.c, HkForm::ViaDphi, mut), hk, false, true});
  cc.ops.push_back({"pi(Hk via Dr) = H_k", extended_Hk_sum(o.c, HkForm::ViaDr, mut), hk, false, true});
}

void integral_commutes(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dp = build_Dphi(o.c, mut);
  const OpSum h = extended_Hk_sum(o.c, HkForm::ViaDphi, mut);
  const OpWord d2{Dp, Dp};
  cc.ops.push_back({"Hk Dphi^2 = Dphi^2 Hk", times(h, d2), times(d2, h)});
}

void integral_commutes_projected(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dp = build_Dphi(o.c, mut);
  const OpExpr x = project_identity(normal_form(OpWord{-Dp, Dp}));
  const OpExpr hk = build_Hk(o.c);
  cc.ops.push_back({"H_k pi(-Dphi^2) = pi(-Dphi^2) H_k", {{hk, x}}, {{x, hk}}});
}

void integral_projection(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr Dp = build_Dphi(o.c, mut);
  const OpExpr ab = o.a() + o.b();
  const OpExpr rhs = build_Xk(o.c, mut) - (ab * ab).scaled(o.k * o.k);
  cc.ops.push_back({"pi(-Dphi^2) = X_k - k^2 (a+b)^2", {{-Dp, Dp}}, {{rhs}}, false, true});
}

// Both lines of the extended Hamiltonian display, with the constants written out.
OpSum hk_display(const Ops& o, const OpExpr& Dp, const OpExpr& sum_r) {
  const OpExpr a = o.a(), b = o.b();
  const OpExpr ct = o.num(o.k) * (a * a + b * b + (a * b).scaled(2) * o.R()) * sum_r;
  return {
      {-o.dr(), o.dr()}, {-o.r(-1), o.dr()}, {-o.r(-2), Dp, Dp}, {o.r(-2), ct}, {o.w2(), o.r(2)},
  };
}

OpSum hk_display_dr(const Ops& o, const OpExpr& Dr, const OpExpr& Dp, const OpExpr& sum_r) {
  const OpExpr g = (o.a() * o.R() + o.b()) * sum_r * o.I();
  return {{-Dr, Dr}, {-o.r(-1), o.one() + g.scaled(2), Dr}, {-o.r(-2), Dp, Dp}, {o.w2(), o.r(2)}};
}

void k3_specialization(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr a = o.a(), b = o.b(), I = o.I();
  const OpExpr sum_r = o.one() + o.R(2) + o.R(4);
  const OpExpr dr3 = o.dr() - o.r(-1) * (a * o.R() + b) * sum_r * I;
  const OpExpr tan_part =
      o.f(TrigKind::TanShift, 0) * o.R(3) + o.f(TrigKind::TanShift, 1) * o.R(5) + o.f(TrigKind::TanShift, 2) * o.R(1);
  const OpExpr cot_part =
      o.f(TrigKind::CotShift, 0) + o.f(TrigKind::CotShift, 1) * o.R(2) + o.f(TrigKind::CotShift, 2) * o.R(4);
  const OpExpr Dr = build_Dr(o.c, mut);
  const OpExpr Dp = build_Dphi(o.c, mut);
  cc.ops.push_back({"Dr display", {{Dr}}, {{dr3}}});
  cc.ops.push_back({"Dphi display", {{Dp}}, {{o.dphi()}, {a, tan_part, I}, {-b, cot_part, I}}});
  cc.ops.push_back({"Hk display via Dphi", extended_Hk_sum(o.c, HkForm::ViaDphi, mut), hk_display(o, Dp, sum_r)});
  cc.ops.push_back({"Hk display via Dr", extended_Hk_sum(o.c, HkForm::ViaDr, mut), hk_display_dr(o, Dr, Dp, sum_r)});
}

void k2_specialization(const Ops& o, Mutation mut, CheckCase& cc) {
  const OpExpr a = o.a(), b = o.b(), I = o.I();
  const OpExpr sum_r = o.one() + o.R(2);
  const OpExpr dr2 = o.dr() - o.r(-1) * (a * o.R() + b) * sum_r * I;
  const OpExpr t2 = o.f(TrigKind::TanK), s2 = o.f(TrigKind::SecK);
  const OpExpr a_part = (t2 + s2) * o.R(2) + t2 - s2;
  const OpExpr b_part = o.f(TrigKind::TanShift, 0) * o.R(2) - o.f(TrigKind::CotShift, 0);
  const OpExpr Dr = build_Dr(o.c, mut);
  const OpExpr Dp = build_Dphi(o.c, mut);
  cc.ops.push_back({"Dr display", {{Dr}}, {{dr2}}});
  cc.ops.push_back({"Dphi display", {{Dp}}, {{o.dphi()}, {a, a_part, o.R(), I}, {b, b_part, I}}});
  cc.ops.push_back({"Dphi^2 display", {{Dp, Dp}}, dphi_squared_k2(o)});
  cc.ops.push_back({"Hk display via Dphi", extended_Hk_sum(o.c, HkForm::ViaDphi, mut), hk_display(o, Dp, sum_r)});
  cc.ops.push_back({"Hk display via Dr", extended_Hk_sum(o.c, HkForm::ViaDr, mut), hk_display_dr(o, Dr, Dp, sum_r)});
}

// ---------------------------------------------------------------------------
// Scalar trig checks

constexpr double kPi = std::numbers::pi;

void trig_sec2(const Ops& o, Mutation mut, CheckCase& cc) {
  const int k = o.k;
  const double kk = k * k;
  cc.scalars.push_back({"sum sec^2(phi + i pi/k) = k^2 sec^2 k phi",
                        shifted_sum(o, mut, [&](int i) { return o.t(TrigKind::Sec2Shift, i); }),
                        o.t(TrigKind::Sec2K).scaled(Rational(k * k)),
                        shifted_sum_num(k, mut, [k](double p, int i) { return sec2(p + i * kPi / k); }),
                        [k, kk](double p) { return kk * sec2(k * p); }});
  cc.scalars.push_back({"sum csc^2(phi + i pi/k) = k^2 csc^2 k phi",
                        shifted_sum(o, Mutation::None, [&](int i) { return o.t(TrigKind::Csc2Shift, i); }),
                        o.t(TrigKind::Csc2K).scaled(Rational(k * k)),
                        shifted_sum_num(k, Mutation::None, [k](double p, int i) { return csc2(p + i * kPi / k); }),
                        [k, kk](double p) { return kk * csc2(k * p); }});
}

void trig_csc2(const Ops& o, Mutation mut, CheckCase& cc) {
  const int k = o.k;
  const double kk = k * k;
  cc.scalars.push_back({"sum csc^2(phi + i pi/k) = k^2 csc^2 k phi",
                        shifted_sum(o, mut, [&](int i) { return o.t(TrigKind::Csc2Shift, i); }),
                        o.t(TrigKind::Csc2K).scaled(Rational(k * k)),
                        shifted_sum_num(k, mut, [k](double p, int i) { return csc2(p + i * kPi / k); }),
                        [k, kk](double p) { return kk * csc2(k * p); }});
}

enum class PairKind { TanTan, CotCot, Mixed };

void trig_pair(const Ops& o, Mutation mut, int j, PairKind kind, CheckCase& cc) {
  const int k = o.k;
  auto exact = [&o, j, kind](int i) {
    const int u = i + j, v = i + 2 * j;
    switch (kind) {
    case PairKind::TanTan:
      return o.t(TrigKind::TanShift, u) * o.t(TrigKind::TanShift, v);
    case PairKind::CotCot:
      return o.t(TrigKind::CotShift, u) * o.t(TrigKind::CotShift, v);
    case PairKind::Mixed:
      break;
    }
    return o.t(TrigKind::TanShift, u) * o.t(TrigKind::CotShift, v) + o.t(TrigKind::CotShift, u) * o.t(TrigKind::TanShift, v);
  };
  auto numeric = [k, j, kind](double p, int i) {
    const double x = p + (i + j) * kPi / k, y = p + (i + 2 * j) * kPi / k;
    switch (kind) {
    case PairKind::TanTan:
      return std::tan(x) * std::tan(y);
    case PairKind::CotCot:
      return cot(x) * cot(y);
    case PairKind::Mixed:
      break;
    }
    return std::tan(x) * cot(y) + cot(x) * std::tan(y);
  };
  const int rhs = kind == PairKind::Mixed ? 2 * k : -k;
  const char* label = kind == PairKind::TanTan   ? "sum tan tan = -k"
                      : kind == PairKind::CotCot ? "sum cot cot = -k"
                                                 : "sum (tan cot + cot tan) = 2k";
  cc.scalars.push_back({label, shifted_sum(o, mut, exact), ZRat::from_rational(*o.c, rhs), shifted_sum_num(k, mut, numeric),
                        constant_num(rhs)});
}

void trig_half_angle(const Ops& o, Mutation mut, CheckCase& cc) {
  const int k = o.k;
  // The mutation evaluates the first term at phi + pi/k.
  const int first_shift = mut == Mutation::TrigShift ? 1 : 0;
  auto inv2 = [](double x) { return 1.0 / (x * x); };
  cc.scalars.push_back(
      {"(cos - sin)^-2 + (cos + sin)^-2 at k phi/2 = 2 sec^2 k phi",
       rotate(o.t(TrigKind::HalfDiffInv2), first_shift) + o.t(TrigKind::HalfSumInv2), o.t(TrigKind::Sec2K).scaled(Rational(2)),
       [k, first_shift, inv2](double p) {
         const double u = k * (p + first_shift * kPi / k) / 2, v = k * p / 2;
         return inv2(std::cos(u) - std::sin(u)) + inv2(std::cos(v) + std::sin(v));
       },
       [k](double p) { return 2 * sec2(k * p); }});
}

void trig_cot_sum(const Ops& o, Mutation mut, CheckCase& cc) {
  const int k = o.k;
  cc.scalars.push_back({"sum cot(phi + i pi/k) = k cot k phi",
                        shifted_sum(o, mut, [&](int i) { return o.t(TrigKind::CotShift, i); }),
                        o.t(TrigKind::CotK).scaled(Rational(k)),
                        shifted_sum_num(k, mut, [k](double p, int i) { return cot(p + i * kPi / k); }),
                        [k](double p) { return k * cot(k * p); }});
}

// ---------------------------------------------------------------------------
// Registry

struct Entry {
  std::string id;
  Parity parity;
  Mutation mutation;
  bool per_j; // one row per j = 1..k-1
  std::function<void(const Ops&, Mutation, int, CheckCase&)> build;
};

template <class F> auto plain(F f) {
  return [f](const Ops& o, Mutation m, int, CheckCase& cc) { f(o, m, cc); };
}

auto pair(PairKind kind) {
  return [kind](const Ops& o, Mutation m, int j, CheckCase& cc) { trig_pair(o, m, j, kind, cc); };
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {"group_relations", Parity::Any, Mutation::RScale, false, plain(group_relations)},
      {"dr_props", Parity::Any, Mutation::DropRSummand, false, plain(dr_props)},
      {"dphi_props", Parity::Any, Mutation::BShift, false, plain(dphi_props)},
      {"dr_dphi_commutator", Parity::Any, Mutation::DropRSummand, false, plain(dr_dphi_commutator)},
      {"trig_sec2", Parity::Odd, Mutation::TrigShift, false, plain(trig_sec2)},
      {"trig_csc2", Parity::Even, Mutation::TrigShift, false, plain(trig_csc2)},
      {"trig_tan_tan", Parity::Odd, Mutation::TrigShift, true, pair(PairKind::TanTan)},
      {"trig_cot_cot", Parity::Odd, Mutation::TrigShift, true, pair(PairKind::CotCot)},
      {"trig_mixed", Parity::Odd, Mutation::TrigShift, true, pair(PairKind::Mixed)},
      {"trig_half_angle", Parity::Even, Mutation::TrigShift, false, plain(trig_half_angle)},
      {"trig_cot_sum", Parity::Even, Mutation::TrigShift, false, plain(trig_cot_sum)},
      {"dphi_squared", Parity::Any, Mutation::BShift, false, plain(dphi_squared)},
      {"s_props", Parity::Even, Mutation::SScale, false, plain(s_props)},
      {"hk_two_forms", Parity::Any, Mutation::DropRSummand, false, plain(hk_two_forms)},
      {"hk_invariance", Parity::Any, Mutation::BShift, false, plain(hk_invariance)},
      {"hk_projection", Parity::Any, Mutation::BShift, false, plain(hk_projection)},
      {"integral_commutes", Parity::Any, Mutation::BShift, false, plain(integral_commutes)},
      {"integral_commutes_projected", Parity::Any, Mutation::BShift, false, plain(integral_commutes_projected)},
      {"integral_projection", Parity::Any, Mutation::XPotential, false, plain(integral_projection)},
      {"k3_specialization", Parity::OnlyK3, Mutation::BShift, false, plain(k3_specialization)},
      {"k2_specialization", Parity::OnlyK2, Mutation::BShift, false, plain(k2_specialization)},
  };
  return r;
}

const Entry& lookup(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown check id '" + id + "'");
}

// Splits "name[j=3]" into ("name", 3); plain ids give j = 0.
std::pair<std::string, int> split_row_id(const std::string& id) {
  const auto open = id.find("[j=");
  if (open == std::string::npos || id.back() != ']') return {id, 0};
  try {
    return {id.substr(0, open), std::stoi(id.substr(open + 3, id.size() - open - 4))};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed check id '" + id + "'");
  }
}

bool glob_match(const char* pat, const char* s) {
  if (*pat == '\0') return *s == '\0';
  if (*pat == '*') return glob_match(pat + 1, s) || (*s != '\0' && glob_match(pat, s + 1));
  return *pat == *s && glob_match(pat + 1, s + 1);
}

// Orders digit runs numerically so that [j=10] follows [j=9].
bool natural_less(const std::string& x, const std::string& y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (std::isdigit(static_cast<unsigned char>(x[i])) && std::isdigit(static_cast<unsigned char>(y[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < x.size() && std::isdigit(static_cast<unsigned char>(x[i2]))) ++i2;
      while (j2 < y.size() && std::isdigit(static_cast<unsigned char>(y[j2]))) ++j2;
      const long long a = std::stoll(x.substr(i, i2 - i)), b = std::stoll(y.substr(j, j2 - j));
      if (a != b) return a < b;
      i = i2;
      j = j2;
      continue;
    }
    if (x[i] != y[j]) return x[i] < y[j];
    ++i;
    ++j;
  }
  return x.size() - i < y.size() - j;
}

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::size_t nonzero_coeffs(const ZRat& f) {
  std::size_t n = 0;
  for (const auto& c : f.num().coeffs())
    if (!c.is_zero()) ++n;
  return n;
}

} // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

Mutation documented_mutation(const std::string& check_id) { return lookup(split_row_id(check_id).first).mutation; }

std::vector<CheckCase> build_cases(const std::string& check_id, const FieldPtr& ctx, Mutation mut) {
  const Entry& e = lookup(check_id);
  const Ops o{ctx, ctx->k()};
  const bool ok = admits(e.parity, o.k) && (!e.per_j || o.k > 1);
  if (!ok) {
    CheckCase skipped;
    skipped.id = e.id;
    skipped.k = o.k;
    skipped.ctx = ctx;
    skipped.applicable = false;
    return {skipped};
  }
  std::vector<CheckCase> rows;
  if (!e.per_j) {
    rows.emplace_back();
    rows.back().id = e.id;
    rows.back().k = o.k;
    rows.back().ctx = ctx;
    e.build(o, mut, 0, rows.back());
    return rows;
  }
  for (int j = 1; j < o.k; ++j) {
    rows.emplace_back();
    rows.back().id = e.id + "[j=" + std::to_string(j) + "]";
    rows.back().k = o.k;
    rows.back().ctx = ctx;
    e.build(o, mut, j, rows.back());
  }
  return rows;
}

std::string first_term(const OpExpr& x) {
  if (x.is_zero()) return "";
  const auto& [key, c] = *x.terms().begin();
  const auto& [ck, f] = *c.terms().begin();
  return OpExpr(x.ctx_ptr(), Coefficient(ck, f), key).str();
}

CheckReport evaluate(const CheckCase& c) {
  const auto t0 = Clock::now();
  CheckReport rep;
  rep.check_id = c.id;
  rep.k = c.k;
  if (!c.applicable) return rep;
  for (const auto& rel : c.ops) {
    OpExpr lhs = normal_form(rel.lhs);
    OpExpr rhs = normal_form(rel.rhs);
    if (rel.adjoint_lhs) lhs = adjoint(lhs);
    OpExpr res = lhs - rhs;
    if (rel.project) res = project_identity(res);
    if (res.is_zero()) continue;
    if (rep.residual_sample.empty()) rep.residual_sample = rel.label + ": " + first_term(res);
    rep.residual_term_count += res.term_count();
  }
  for (const auto& rel : c.scalars) {
    const ZRat res = rel.lhs - rel.rhs;
    if (res.is_zero()) continue;
    if (rep.residual_sample.empty()) rep.residual_sample = rel.label + ": " + res.str();
    rep.residual_term_count += nonzero_coeffs(res);
  }
  rep.status = rep.residual_term_count == 0 ? Status::Pass : Status::Fail;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

CheckReport check(const std::string& check_id, int k, Mutation mut, int max_k) {
  const auto [name, j] = split_row_id(check_id);
  const FieldPtr ctx = ctx_new(k, max_k);
  std::vector<CheckCase> rows = build_cases(name, ctx, mut);
  if (j != 0) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const CheckCase& c) { return c.id == check_id; });
    if (it == rows.end()) {
      if (rows.size() == 1 && !rows.front().applicable) return evaluate(rows.front());
      throw std::invalid_argument("no row '" + check_id + "' at k=" + std::to_string(k));
    }
    return evaluate(*it);
  }
  CheckReport out;
  out.check_id = name;
  out.k = k;
  bool any_applicable = false;
  for (const auto& row : rows) {
    CheckReport r = evaluate(row);
    if (r.status == Status::Skipped) continue;
    any_applicable = true;
    out.residual_term_count += r.residual_term_count;
    out.elapsed_ms += r.elapsed_ms;
    if (out.residual_sample.empty() && !r.residual_sample.empty()) out.residual_sample = r.check_id + " " + r.residual_sample;
  }
  if (any_applicable) out.status = out.residual_term_count == 0 ? Status::Pass : Status::Fail;
  return out;
}

bool filter_matches(const std::string& filter, const std::string& check_id) {
  if (filter.empty()) return true;
  std::size_t start = 0;
  while (start <= filter.size()) {
    std::size_t end = filter.find(',', start);
    if (end == std::string::npos) end = filter.size();
    const std::string tok = filter.substr(start, end - start);
    start = end + 1;
    if (tok.empty()) continue;
    if (tok == "all") return true;
    const Entry& e = lookup(check_id);
    if (tok == "trig" && check_id.rfind("trig_", 0) == 0) return true;
    if (tok == "odd" && e.parity == Parity::Odd) return true;
    if (tok == "even" && e.parity == Parity::Even) return true;
    if (glob_match(tok.c_str(), check_id.c_str())) return true;
  }
  return false;
}

std::vector<CheckCase> suite_cases(const std::vector<int>& ks, const std::string& filter, Mutation mut, int max_k) {
  std::vector<CheckCase> cases;
  for (int k : ks) {
    const FieldPtr ctx = ctx_new(k, max_k);
    for (const auto& id : check_ids()) {
      if (!filter_matches(filter, id)) continue;
      for (auto& c : build_cases(id, ctx, mut)) cases.push_back(std::move(c));
    }
  }
  return cases;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < n; t = next++) fn(t);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

bool report_less(const CheckReport& x, const CheckReport& y) {
  if (x.k != y.k) return x.k < y.k;
  return natural_less(x.check_id, y.check_id);
}

std::vector<CheckReport> run_suite(const std::vector<int>& ks, const std::string& filter, Mutation mut, int max_k) {
  const std::vector<CheckCase> cases = suite_cases(ks, filter, mut, max_k);
  std::vector<CheckReport> out(cases.size());
  parallel_for(cases.size(), [&](std::size_t t) { out[t] = evaluate(cases[t]); });
  std::stable_sort(out.begin(), out.end(), report_less);
  return out;
}

} // namespace dunkl
