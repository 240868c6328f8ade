#ifndef DUNKL_COEFFICIENT_HPP
#define DUNKL_COEFFICIENT_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "dunkl/zrat.hpp"

namespace dunkl {

/// Monomial r^r_exp a^a_deg b^b_deg w2^w2_deg.
struct CoeffKey {
  int r_exp = 0;
  int a_deg = 0;
  int b_deg = 0;
  int w2_deg = 0;

  friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

/// Element of the commutative coefficient ring: a polynomial in the real
/// parameters a, b, w2 = omega^2 and a Laurent polynomial in r, with ZRat
/// (functions of z = exp(i phi)) as coefficients. Zero entries are never stored.
class Coefficient {
public:
  using Terms = std::map<CoeffKey, ZRat>;

  Coefficient() = default;
  Coefficient(const ZRat& f); // NOLINT(google-explicit-constructor)
  Coefficient(const CoeffKey& key, const ZRat& f);

  static Coefficient scalar(const FieldCtx& ctx, const Rational& q);
  static Coefficient r_power(const FieldCtx& ctx, int m);
  static Coefficient param_a(const FieldCtx& ctx);
  static Coefficient param_b(const FieldCtx& ctx);
  static Coefficient param_w2(const FieldCtx& ctx);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient scaled(const Rational& q) const;

  /// Adds f * monomial(key) in place.
  void add_term(const CoeffKey& key, const ZRat& f);

  /// Applies a map to every ZRat entry (rotate, reflect, conj_coeff, d_phi).
  Coefficient map_z(const std::function<ZRat(const ZRat&)>& fn) const;
  /// s-th partial derivative in r.
  Coefficient d_r(int s = 1) const;

  int max_a_deg() const;
  int max_b_deg() const;
  int max_w2_deg() const;

  std::string str() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

private:
  Terms terms_;
};

/// True when printed text has a space outside parentheses and so must be
/// grouped before it is used as a factor.
bool needs_grouping(const std::string& text);

} // namespace dunkl

#endif // DUNKL_COEFFICIENT_HPP
