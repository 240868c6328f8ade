#ifndef DUNKL_TESTS_SUPPORT_HPP
#define DUNKL_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "dunkl/builders.hpp"
#include "dunkl/oracle.hpp"

namespace dunkl::testing {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937_64& rng) {
  int n = uniform_int(rng, -6, 6);
  if (n == 0) n = 1;
  return Rational(n, uniform_int(rng, 1, 4));
}

inline CycloScalar random_scalar(const FieldCtx& ctx, std::mt19937_64& rng, bool nonzero = false) {
  for (;;) {
    CycloScalar x(ctx);
    for (auto& c : x.coords())
      if (uniform_int(rng, 0, 2) > 0) c = Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5));
    if (!nonzero || !x.is_zero()) return x;
  }
}

inline ZRat random_zrat(const FieldCtx& ctx, std::mt19937_64& rng) {
  static const TrigKind kinds[] = {TrigKind::TanShift, TrigKind::CotShift, TrigKind::Sec2Shift,
                                   TrigKind::Csc2Shift, TrigKind::SecK,     TrigKind::TanK};
  ZRat f(ctx);
  const int terms = uniform_int(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    ZRat g = ZRat::z_power(ctx, uniform_int(rng, -2, 2)).scaled(random_scalar(ctx, rng, true));
    if (uniform_int(rng, 0, 1)) g *= trig(kinds[uniform_int(rng, 0, 5)], uniform_int(rng, 0, 2 * ctx.k() - 1), ctx);
    f += g;
  }
  return f;
}

/// A single random factor: a constant, parameter, radial power, z-coefficient or generator.
inline OpExpr random_atom(const FieldPtr& ctx, std::mt19937_64& rng) {
  switch (uniform_int(rng, 0, 9)) {
  case 0:
    return OpExpr::scalar(ctx, small_rational(rng));
  case 1:
    return OpExpr::param_a(ctx);
  case 2:
    return uniform_int(rng, 0, 1) ? OpExpr::param_b(ctx) : OpExpr::param_w2(ctx);
  case 3:
    return OpExpr::r_power(ctx, uniform_int(rng, -2, 2));
  case 4:
  case 5:
    return OpExpr::zrat(ctx, random_zrat(*ctx, rng));
  case 6:
    return OpExpr::d_r(ctx);
  case 7:
    return OpExpr::d_phi(ctx);
  case 8:
    return OpExpr::rot(ctx, uniform_int(rng, 1, 2 * ctx->k() - 1));
  default:
    return OpExpr::refl(ctx);
  }
}

/// Sum of up to max_terms products of up to max_factors atoms.
inline OpExpr random_op(const FieldPtr& ctx, std::mt19937_64& rng, int max_terms = 3, int max_factors = 2) {
  OpExpr x(ctx);
  const int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    OpExpr p = random_atom(ctx, rng);
    const int factors = uniform_int(rng, 1, max_factors);
    for (int f = 1; f < factors; ++f) p = p * random_atom(ctx, rng);
    x += p;
  }
  return x;
}

/// Smooth test function F(r, phi) = g(r) P(exp(i phi)) with its phi-derivative.
struct PlainFunc {
  std::function<std::complex<double>(double)> g;
  std::vector<std::complex<double>> p; ///< coefficients of z^(lo + n)
  int lo = 0;

  std::complex<double> operator()(double r, double phi) const {
    std::complex<double> s;
    for (std::size_t n = 0; n < p.size(); ++n) s += p[n] * std::polar(1.0, (lo + static_cast<double>(n)) * phi);
    return g(r) * s;
  }
  std::complex<double> d_phi(double r, double phi) const {
    std::complex<double> s;
    for (std::size_t n = 0; n < p.size(); ++n) {
      const double m = lo + static_cast<double>(n);
      s += std::complex<double>(0, m) * p[n] * std::polar(1.0, m * phi);
    }
    return g(r) * s;
  }
};

inline PlainFunc plain(const TestFunc& f) {
  PlainFunc out;
  out.g = [s = f.s, c = f.c](double r) { return std::complex<double>(std::pow(r, s) * std::exp(c * r * r)); };
  out.p = f.p;
  out.lo = f.lo;
  return out;
}

} // namespace dunkl::testing

#endif // DUNKL_TESTS_SUPPORT_HPP
