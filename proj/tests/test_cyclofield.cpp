#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "dunkl/cyclofield.hpp"
#include "support.hpp"

using namespace dunkl;
using dunkl::testing::random_scalar;

namespace {

// Phi_n from its roots: prod over primitive n-th roots of (x - w), rounded.
IntPoly cyclotomic_from_roots(int n) {
  std::vector<std::complex<double>> c{1.0};
  for (int m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    const auto w = std::polar(1.0, 2 * std::numbers::pi * m / n);
    std::vector<std::complex<double>> next(c.size() + 1);
    for (std::size_t t = 0; t < c.size(); ++t) {
      next[t + 1] += c[t];
      next[t] -= w * c[t];
    }
    c = next;
  }
  IntPoly out;
  for (auto v : c) out.push_back(std::llround(v.real()));
  return out;
}

bool close(std::complex<double> x, std::complex<double> y, double tol) {
  return std::abs(x - y) <= tol * std::max(1.0, std::abs(y));
}

} // namespace

TEST_CASE("rational arithmetic stays exact across the 64-bit boundary") {
  Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  CHECK(big / Rational(INT64_MAX) == Rational(INT64_MAX));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("field context sizes") {
  auto c3 = ctx_new(3);
  CHECK(c3->N() == 12);
  CHECK(c3->deg() == 4);

  auto c2 = ctx_new(2);
  CHECK(c2->N() == 4);
  CHECK(c2->phiN() == IntPoly{1, 0, 1});

  auto c5 = ctx_new(5);
  CHECK(c5->N() == 20);
  CHECK(c5->deg() == 8);
  CHECK(c5->phiN() == cyclotomic_from_roots(20));

  CHECK(ctx_new(1)->N() == 4);
  CHECK(ctx_new(6)->N() == 12);
}

TEST_CASE("cyclotomic polynomials match their roots for every N up to k = 12") {
  for (int k = 1; k <= 12; ++k) {
    const int n = std::lcm(4, 2 * k);
    CAPTURE(n);
    CHECK(cyclotomic_polynomial(n) == cyclotomic_from_roots(n));
    CHECK(euler_phi(n) == static_cast<int>(cyclotomic_from_roots(n).size()) - 1);
  }
}

TEST_CASE("context bounds") {
  CHECK_THROWS_AS(ctx_new(0), std::invalid_argument);
  CHECK_THROWS_AS(ctx_new(13), std::invalid_argument);
  CHECK_NOTHROW(ctx_new(13, 13));
}

TEST_CASE("roots of unity") {
  for (int k = 1; k <= 12; ++k) {
    auto ctx = ctx_new(k);
    const FieldCtx& f = *ctx;
    CAPTURE(k);
    CHECK(CycloScalar::root_power(f, f.N()).is_one());
    CHECK(CycloScalar::root_power(f, -1) == CycloScalar::root_power(f, f.N() - 1));
    const CycloScalar rho = CycloScalar::root_power(f, f.rho_exp());
    CycloScalar p(f, 1);
    for (int t = 0; t < k; ++t) p *= rho;
    CHECK(p == CycloScalar(f, -1));
    CHECK((p * p).is_one());
    CHECK(close(numeric_embed(CycloScalar::imag_unit(f)), {0, 1}, 1e-15));
    CHECK(close(numeric_embed(CycloScalar(f, 1)), {1, 0}, 0));
  }
  auto c3 = ctx_new(3);
  CHECK(CycloScalar::root_power(*c3, 3) == CycloScalar::imag_unit(*c3));
}

TEST_CASE("inverting zero is a reported error") {
  auto ctx = ctx_new(4);
  CHECK_THROWS_AS(CycloScalar(*ctx).inv(), std::domain_error);
}

TEST_CASE("field laws against the numeric embedding for every N from k = 1..12") {
  std::mt19937_64 rng(7);
  for (int k = 1; k <= 12; ++k) {
    auto ctx = ctx_new(k);
    const FieldCtx& f = *ctx;
    CAPTURE(k);
    for (int t = 0; t < 25; ++t) {
      const CycloScalar x = random_scalar(f, rng, true);
      const CycloScalar y = random_scalar(f, rng);
      const CycloScalar z = random_scalar(f, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK((x * x.inv()).is_one());
      CHECK(x.conj().conj() == x);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(close(numeric_embed(x * y), numeric_embed(x) * numeric_embed(y), 1e-12));
      CHECK(close(numeric_embed(x + y), numeric_embed(x) + numeric_embed(y), 1e-12));
      CHECK(close(numeric_embed(x.conj()), std::conj(numeric_embed(x)), 1e-12));
      CHECK(close(numeric_embed(x.inv()), 1.0 / numeric_embed(x), 1e-12));
    }
  }
}
