#ifndef DUNKL_CYCLOFIELD_HPP
#define DUNKL_CYCLOFIELD_HPP

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Default ceiling on the dihedral index k. Overridable per context.
inline constexpr int kDefaultMaxK = 12;

/// Dense integer polynomial, lowest degree first.
using IntPoly = std::vector<long long>;

/// Exact division of x^N - 1 by all proper-divisor cyclotomic polynomials.
IntPoly cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Arithmetic context for Q(zeta_N) with N = lcm(4, 2k).
///
/// Both i = zeta^(N/4) and the rotation root rho = zeta^(N/2k) = exp(i pi/k)
/// live in this field. Contexts are immutable after construction and may be
/// shared across threads.
class FieldCtx {
public:
  int k() const { return k_; }
  int N() const { return n_; }
  int deg() const { return deg_; }
  const IntPoly& phiN() const { return phi_; }

  /// Exponent s with zeta^s = rho.
  int rho_exp() const { return n_ / (2 * k_); }
  /// Exponent s with zeta^s = i.
  int i_exp() const { return n_ / 4; }

  /// Sparse reduced coordinates of zeta^t for 0 <= t < 2*deg - 1.
  struct Entry {
    int index;
    long long coeff;
  };
  std::span<const Entry> power(int t) const { return powers_[t]; }
  /// Coordinates of zeta^j for 0 <= j < N (reduced mod Phi_N).
  std::span<const Entry> root(int j) const { return roots_[j]; }

  std::complex<double> zeta_numeric(int j) const;

private:
  friend std::shared_ptr<const FieldCtx> ctx_new(int k, int max_k);
  FieldCtx() = default;

  int k_ = 0;
  int n_ = 0;
  int deg_ = 0;
  IntPoly phi_;
  std::vector<std::vector<Entry>> powers_;
  std::vector<std::vector<Entry>> roots_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds the field context for dihedral index k. Throws std::invalid_argument
/// for k < 1 or k > max_k.
FieldPtr ctx_new(int k, int max_k = kDefaultMaxK);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(deg-1).
class CycloScalar {
public:
  CycloScalar() = default;
  explicit CycloScalar(const FieldCtx& ctx) : ctx_(&ctx), c_(ctx.deg()) {}
  CycloScalar(const FieldCtx& ctx, const Rational& q) : CycloScalar(ctx) { c_[0] = q; }

  /// zeta^j, with j reduced mod N.
  static CycloScalar root_power(const FieldCtx& ctx, long long j);
  static CycloScalar imag_unit(const FieldCtx& ctx) { return root_power(ctx, ctx.i_exp()); }

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  std::span<const Rational> coords() const { return c_; }
  std::span<Rational> coords() { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when only the constant coordinate is nonzero.
  bool is_rational() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator*=(const Rational& q);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(CycloScalar a, const Rational& q) { return a *= q; }

  /// Multiplicative inverse via extended Euclid against Phi_N. Throws
  /// std::domain_error on zero.
  CycloScalar inv() const;
  /// Ring automorphism zeta -> zeta^(N-1) (complex conjugation).
  CycloScalar conj() const;
  /// Ring automorphism zeta -> zeta^m for m coprime to N.
  CycloScalar galois(int m) const;
  /// this * zeta^j.
  CycloScalar mul_root(long long j) const;

  std::complex<double> numeric() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }
  friend bool operator<(const CycloScalar& a, const CycloScalar& b) { return a.c_ < b.c_; }

  std::string str() const;

private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<Rational> c_;
};

/// out += x * y over Q(zeta_N); all spans have length deg.
void field_fma(std::span<Rational> out, std::span<const Rational> x, std::span<const Rational> y,
               const FieldCtx& ctx);

std::complex<double> numeric_embed(const CycloScalar& x);

} // namespace dunkl

#endif // DUNKL_CYCLOFIELD_HPP
