#ifndef DUNKL_OPALGEBRA_HPP
#define DUNKL_OPALGEBRA_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dunkl/coefficient.hpp"

namespace dunkl {

/// Exponents of a normal-ordered monomial  d_r^p d_phi^q R^i I^e.
struct OpKey {
  int p = 0; ///< power of d/dr
  int q = 0; ///< power of d/dphi
  int i = 0; ///< rotation power, 0 <= i < 2k
  int e = 0; ///< reflection power, 0 or 1

  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

/// Canonical sum of normal-ordered terms  c(r, z, a, b, w2) d_r^p d_phi^q R^i I^e.
///
/// The group part sits rightmost, so R^(2k) and I^2 never appear and two
/// operators are equal exactly when their term maps agree.
class OpExpr {
public:
  using Terms = std::map<OpKey, Coefficient>;

  OpExpr() = default;
  explicit OpExpr(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  OpExpr(FieldPtr ctx, const Coefficient& c, const OpKey& key = {});

  static OpExpr identity(const FieldPtr& ctx) { return scalar(ctx, 1); }
  static OpExpr scalar(const FieldPtr& ctx, const Rational& q);
  static OpExpr coeff(const FieldPtr& ctx, const Coefficient& c) { return OpExpr(ctx, c); }
  static OpExpr zrat(const FieldPtr& ctx, const ZRat& f) { return OpExpr(ctx, Coefficient(f)); }
  static OpExpr d_r(const FieldPtr& ctx);
  static OpExpr d_phi(const FieldPtr& ctx);
  /// R^power, with power reduced mod 2k.
  static OpExpr rot(const FieldPtr& ctx, int power = 1);
  static OpExpr refl(const FieldPtr& ctx);
  static OpExpr r_power(const FieldPtr& ctx, int m);
  static OpExpr param_a(const FieldPtr& ctx);
  static OpExpr param_b(const FieldPtr& ctx);
  static OpExpr param_w2(const FieldPtr& ctx);

  const FieldPtr& ctx_ptr() const { return ctx_; }
  const FieldCtx& ctx() const { return *ctx_; }
  int k() const { return ctx_->k(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of (OpKey, coefficient monomial) pairs.
  std::size_t term_count() const;

  /// Adds c * monomial(key) in place; the group exponents are reduced.
  void add_term(OpKey key, const Coefficient& c);

  OpExpr operator-() const;
  OpExpr& operator+=(const OpExpr& o);
  OpExpr& operator-=(const OpExpr& o);
  friend OpExpr operator+(OpExpr a, const OpExpr& b) { return a += b; }
  friend OpExpr operator-(OpExpr a, const OpExpr& b) { return a -= b; }
  friend OpExpr operator*(const OpExpr& a, const OpExpr& b);
  OpExpr& operator*=(const OpExpr& o) { return *this = *this * o; }
  OpExpr scaled(const Rational& q) const;
  OpExpr pow(int n) const;

  /// Maximum d_r and d_phi exponents present.
  int max_p() const;
  int max_q() const;
  /// True when every term has trivial group part.
  bool is_differential() const;

  std::string str() const;

  friend bool operator==(const OpExpr& a, const OpExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const OpExpr& a, const OpExpr& b) { return !(a == b); }

private:
  FieldPtr ctx_;
  Terms terms_;
};

/// Unevaluated product of operators, leftmost factor first.
using OpWord = std::vector<OpExpr>;
/// Unevaluated sum of products.
using OpSum = std::vector<OpWord>;

/// Throws std::invalid_argument unless both operands live over the same k.
void require_same_ctx(const OpExpr& a, const OpExpr& b);

OpExpr normal_form(const OpWord& word);
OpExpr normal_form(const OpSum& sum);

OpExpr commutator(const OpExpr& x, const OpExpr& y);
OpExpr anticommutator(const OpExpr& x, const OpExpr& y);

/// Formal adjoint for the planar inner product with measure r dr dphi:
/// d_r^+ = -d_r - 1/r, d_phi^+ = -d_phi, R^+ = R^(2k-1), I^+ = I, real
/// parameters, conjugated z-coefficients, products reversed.
OpExpr adjoint(const OpExpr& x);

/// Replaces R and I by 1 in a normal-ordered operator.
OpExpr project_identity(const OpExpr& x);

/// Concatenations used to assemble products without normal ordering.
OpWord concat(const OpWord& a, const OpWord& b);
OpSum times(const OpSum& s, const OpWord& w);
OpSum times(const OpWord& w, const OpSum& s);

} // namespace dunkl

#endif // DUNKL_OPALGEBRA_HPP
