#include <doctest.h>

#include "dunkl/builders.hpp"

using namespace dunkl;

namespace {

struct Kit {
  FieldPtr c;
  explicit Kit(int k) : c(ctx_new(k)) {}

  OpExpr one() const { return OpExpr::scalar(c, 1); }
  OpExpr num(Rational q) const { return OpExpr::scalar(c, q); }
  OpExpr a() const { return OpExpr::param_a(c); }
  OpExpr b() const { return OpExpr::param_b(c); }
  OpExpr w2() const { return OpExpr::param_w2(c); }
  OpExpr r(int m) const { return OpExpr::r_power(c, m); }
  OpExpr R(int n = 1) const { return OpExpr::rot(c, n); }
  OpExpr I() const { return OpExpr::refl(c); }
  OpExpr dr() const { return OpExpr::d_r(c); }
  OpExpr dphi() const { return OpExpr::d_phi(c); }
  OpExpr t(TrigKind kind, int j = 0) const { return OpExpr::zrat(c, trig(kind, j, *c)); }
  OpExpr sq(const OpExpr& x) const { return x * x; }
};

} // namespace

TEST_CASE("S operator") {
  CHECK(build_S(ctx_new(2)) == OpExpr::scalar(ctx_new(2), 1));
  Kit k4(4);
  const OpExpr s4 = build_S(k4.c);
  CHECK(s4 == k4.one() + k4.R(4));
  CHECK((s4 * s4 - s4.scaled(2)).is_zero());
  Kit k6(6);
  const OpExpr s6 = build_S(k6.c);
  CHECK((k6.R(4) * s6 - s6).is_zero());
  CHECK(s6.terms().size() == 3);
  CHECK_THROWS_AS(build_S(ctx_new(3)), std::invalid_argument);
}

TEST_CASE("D_r at k = 1 and k = 3") {
  Kit k1(1);
  CHECK(build_Dr(k1.c) == k1.dr() - k1.r(-1) * (k1.a() * k1.R() + k1.b()) * k1.I());
  Kit k3(3);
  CHECK(build_Dr(k3.c) ==
        k3.dr() - k3.r(-1) * (k3.a() * k3.R() + k3.b()) * (k3.one() + k3.R(2) + k3.R(4)) * k3.I());
}

TEST_CASE("D_phi at k = 3, term for term") {
  Kit k(3);
  using T = TrigKind;
  const OpExpr tan_part = k.t(T::TanShift, 0) * k.R(3) + k.t(T::TanShift, 1) * k.R(5) + k.t(T::TanShift, 2) * k.R();
  const OpExpr cot_part = k.t(T::CotShift, 0) + k.t(T::CotShift, 1) * k.R(2) + k.t(T::CotShift, 2) * k.R(4);
  CHECK(build_Dphi(k.c) == k.dphi() + k.a() * tan_part * k.I() - k.b() * cot_part * k.I());
}

TEST_CASE("D_r and D_phi at k = 2, term for term") {
  Kit k(2);
  using T = TrigKind;
  CHECK(build_Dr(k.c) == k.dr() - k.r(-1) * (k.a() * k.R() + k.b()) * (k.one() + k.R(2)) * k.I());
  const OpExpr tan2 = k.t(T::TanK), sec2 = k.t(T::SecK);
  const OpExpr a_part = ((tan2 + sec2) * k.R(2) + tan2 - sec2) * k.R() * k.I();
  const OpExpr b_part = (k.t(T::TanShift, 0) * k.R(2) - k.t(T::CotShift, 0)) * k.I();
  CHECK(build_Dphi(k.c) == k.dphi() + k.a() * a_part + k.b() * b_part);
}

TEST_CASE("D_phi^2 at k = 2 as displayed") {
  Kit k(2);
  using T = TrigKind;
  const OpExpr a = k.a(), b = k.b(), R = k.R(), I = k.I();
  const OpExpr rhs = k.sq(k.dphi()) -
                     (k.t(T::HalfDiffInv2) * a * (a - k.R(3) * I) + k.t(T::HalfSumInv2) * a * (a - R * I)).scaled(2) -
                     (k.t(T::Sec2Shift, 0) * b * (b - k.R(2) * I) + k.t(T::Csc2Shift, 0) * b * (b - I)) +
                     (k.sq(a) + k.sq(b) + a * b * R.scaled(2)) * (k.one() + k.R(2)).scaled(2);
  CHECK(k.sq(build_Dphi(k.c)) == rhs);
}

TEST_CASE("commutation with the group") {
  for (int kk = 1; kk <= 6; ++kk) {
    Kit k(kk);
    CAPTURE(kk);
    CHECK(commutator(k.R(), build_Dr(k.c)).is_zero());
    CHECK(commutator(k.I(), build_Dr(k.c)).is_zero());
    CHECK(commutator(k.R(), build_Dphi(k.c)).is_zero());
    CHECK(anticommutator(k.I(), build_Dphi(k.c)).is_zero());
  }
}

TEST_CASE("H_k potential") {
  using T = TrigKind;
  for (int kk : {1, 3}) {
    Kit k(kk);
    const OpExpr a = k.a(), b = k.b();
    const OpExpr potential = (a * (a - k.one()) * k.t(T::Sec2K) + b * (b - k.one()) * k.t(T::Csc2K)).scaled(kk * kk);
    const OpExpr radial = -k.sq(k.dr()) - k.r(-1) * k.dr() + k.w2() * k.r(2);
    CHECK(build_Hk(k.c) == radial - k.r(-2) * k.sq(k.dphi()) + k.r(-2) * potential);
    CHECK(build_Xk(k.c) == -k.sq(k.dphi()) + potential);
    CHECK(k.r(2) * (build_Hk(k.c) - radial) - build_Xk(k.c) == OpExpr(k.c));
  }
}

TEST_CASE("extended Hamiltonian") {
  for (int kk = 1; kk <= 6; ++kk) {
    Kit k(kk);
    CAPTURE(kk);
    const OpExpr h = build_extended_Hk(k.c, HkForm::ViaDphi);
    CHECK(h == build_extended_Hk(k.c, HkForm::ViaDr));
    CHECK(commutator(k.R(), h).is_zero());
    CHECK(commutator(k.I(), h).is_zero());
    CHECK(normal_form(extended_Hk_sum(k.c, HkForm::ViaDr)) == h);
  }
  Kit k3(3);
  const OpExpr a = k3.a(), b = k3.b();
  CHECK(counterterm(k3.c) ==
        (k3.sq(a) + k3.sq(b) + a * b * k3.R().scaled(2)) * (k3.one() + k3.R(2) + k3.R(4)).scaled(3));
}

TEST_CASE("H_2 in both displayed forms") {
  Kit k(2);
  const OpExpr a = k.a(), b = k.b(), R = k.R(), I = k.I();
  const OpExpr Dr = build_Dr(k.c), Dphi = build_Dphi(k.c);
  const OpExpr rot = k.one() + k.R(2);
  const OpExpr first = -k.sq(k.dr()) - k.r(-1) * k.dr() -
                       k.r(-2) * (k.sq(Dphi) - (k.sq(a) + k.sq(b) + a * b * R.scaled(2)) * rot.scaled(2)) +
                       k.w2() * k.r(2);
  const OpExpr second = -k.sq(Dr) - k.r(-1) * (k.one() + ((a * R + b) * rot * I).scaled(2)) * Dr -
                        k.r(-2) * k.sq(Dphi) + k.w2() * k.r(2);
  CHECK(first == second);
  CHECK(build_extended_Hk(k.c) == first);
}

TEST_CASE("named operators and determinism") {
  for (int kk : {2, 3}) {
    auto c = ctx_new(kk);
    for (const std::string& name : operator_names()) {
      if (name == "S" && kk % 2) {
        CHECK_THROWS_AS(named_operator(name, c), std::invalid_argument);
        continue;
      }
      auto x = named_operator(name, c);
      REQUIRE(x.has_value());
      CHECK(*x == *named_operator(name, ctx_new(kk)));
    }
    CHECK_FALSE(named_operator("Nope", c).has_value());
  }
}
