#ifndef DUNKL_ZRAT_HPP
#define DUNKL_ZRAT_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/cyclofield.hpp"

namespace dunkl {

/// Dense polynomial in z over Q(zeta_N), lowest degree first, no trailing zeros.
class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  ZPoly(const FieldCtx& ctx, std::vector<CycloScalar> coeffs);

  static ZPoly constant(const CycloScalar& c);
  /// c * z^n for n >= 0.
  static ZPoly monomial(const CycloScalar& c, int n);

  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<CycloScalar>& coeffs() const { return c_; }
  const CycloScalar& operator[](std::size_t i) const { return c_[i]; }
  CycloScalar coeff(int n) const;
  const CycloScalar& lead() const { return c_.back(); }

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly scaled(const CycloScalar& s) const;
  ZPoly shifted(int n) const; ///< times z^n, n >= 0

  /// d/dz.
  ZPoly derivative() const;
  /// p(zeta^s z).
  ZPoly rotated(long long s) const;
  /// Coefficient-wise Galois conjugation.
  ZPoly conj_coeffs() const;
  /// z^deg p(1/z).
  ZPoly reversed() const;

  CycloScalar eval_root(long long m) const; ///< p(zeta^m)
  std::complex<double> eval(std::complex<double> z) const;

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
  friend bool operator<(const ZPoly& a, const ZPoly& b);

  void trim();

private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<CycloScalar> c_;
};

/// Irreducible monic factor of z^(2N) - 1 over Q(zeta_N), or z itself.
///
/// Linear(m) is z - zeta^m. Quadratic(j), j odd, is z^2 - zeta^j and carries
/// the two 2N-th roots of unity that are missing from the field.
struct PoleFactor {
  enum class Kind { Zero, Linear, Quadratic };
  Kind kind = Kind::Zero;
  int idx = 0;

  int degree() const { return kind == Kind::Quadratic ? 2 : 1; }
  ZPoly poly(const FieldCtx& ctx) const;
  bool divides(const ZPoly& p) const;
  /// p / factor; requires divides(p).
  ZPoly divide(const ZPoly& p) const;

  friend auto operator<=>(const PoleFactor&, const PoleFactor&) = default;
};

/// Reduced rational function num(z)/den(z) in z = exp(i phi).
///
/// The denominator is kept as a product of PoleFactor powers (monic by
/// construction) and num is coprime to it, so two values are equal exactly
/// when num and the factor map agree. Every denominator reachable from the
/// trig constructors, z -> rho z, z -> 1/z and the ring operations lies in
/// this factor base.
class ZRat {
public:
  using Den = std::map<PoleFactor, int>;

  ZRat() = default;
  explicit ZRat(const FieldCtx& ctx) : num_(ctx) {}
  ZRat(const CycloScalar& c); // NOLINT(google-explicit-constructor)
  explicit ZRat(ZPoly num) : num_(std::move(num)) {}

  static ZRat from_rational(const FieldCtx& ctx, const Rational& q) { return ZRat(CycloScalar(ctx, q)); }
  /// z^n for any integer n.
  static ZRat z_power(const FieldCtx& ctx, int n);
  /// num / den, canonicalised. Throws std::domain_error when den is zero or
  /// has roots outside {0} and the 2N-th roots of unity.
  static ZRat from_fraction(const ZPoly& num, const ZPoly& den);

  const FieldCtx& ctx() const { return num_.ctx(); }
  const ZPoly& num() const { return num_; }
  const Den& den_factors() const { return den_; }
  /// Expanded monic denominator.
  ZPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// Constant (no z dependence).
  bool is_constant() const { return den_.empty() && num_.degree() <= 0; }
  std::optional<CycloScalar> as_constant() const;

  ZRat operator-() const;
  ZRat& operator+=(const ZRat& o);
  ZRat& operator-=(const ZRat& o);
  ZRat& operator*=(const ZRat& o);
  friend ZRat operator+(ZRat a, const ZRat& b) { return a += b; }
  friend ZRat operator-(ZRat a, const ZRat& b) { return a -= b; }
  friend ZRat operator*(const ZRat& a, const ZRat& b);
  ZRat scaled(const CycloScalar& s) const;
  ZRat scaled(const Rational& q) const;

  /// Multiplicative inverse when the numerator factors over the pole base.
  std::optional<ZRat> inverse() const;

  std::complex<double> eval(std::complex<double> z) const;
  std::string str() const;

  friend bool operator==(const ZRat& a, const ZRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const ZRat& a, const ZRat& b) { return !(a == b); }

private:
  ZRat(ZPoly num, Den den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();
  void reduce_factor(const PoleFactor& f);

  ZPoly num_;
  Den den_;

  friend ZRat d_phi(const ZRat& f);
  friend ZRat rotate(const ZRat& f, int times);
  friend ZRat reflect(const ZRat& f);
  friend ZRat conj_coeff(const ZRat& f);
};

/// i z f'(z): the derivative with respect to phi.
ZRat d_phi(const ZRat& f);
/// f(rho^times z): the coefficient action of R^times.
ZRat rotate(const ZRat& f, int times = 1);
/// f(1/z): the coefficient action of I.
ZRat reflect(const ZRat& f);
/// Complex conjugate on the unit circle: conjugated scalars and z -> 1/z.
ZRat conj_coeff(const ZRat& f);

enum class TrigKind {
  TanShift,     ///< tan(phi + j pi/k)
  CotShift,     ///< cot(phi + j pi/k)
  Sec2Shift,    ///< sec^2(phi + j pi/k)
  Csc2Shift,    ///< csc^2(phi + j pi/k)
  SecK,         ///< sec(k phi)
  TanK,         ///< tan(k phi)
  CotK,         ///< cot(k phi)
  Csc2K,        ///< csc^2(k phi)
  Sec2K,        ///< sec^2(k phi)
  HalfSumInv2,  ///< 1/(cos(k phi/2) + sin(k phi/2))^2, even k
  HalfDiffInv2, ///< 1/(cos(k phi/2) - sin(k phi/2))^2, even k
};

/// Exact z-representation of a trigonometric coefficient. Throws
/// std::invalid_argument for half-angle kinds with odd k.
ZRat trig(TrigKind kind, int j, const FieldCtx& ctx);
ZRat trig(TrigKind kind, const FieldCtx& ctx);

} // namespace dunkl

#endif // DUNKL_ZRAT_HPP
