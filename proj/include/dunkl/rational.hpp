#ifndef DUNKL_RATIONAL_HPP
#define DUNKL_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace dunkl {

/// Arbitrary-precision rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a shared immutable mpq_class. The
/// representation is always canonical: lowest terms, positive denominator,
/// and a big value is demoted as soon as it fits inline again.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Exact value as a GMP rational.
  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  /// this += a * b without an intermediate copy on the fast path.
  void add_mul(const Rational& a, const Rational& b);
  /// this *= n for a machine integer.
  void mul_int(std::int64_t n);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
  void assign_big(mpq_class q);
  void assign_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational binomial(std::int64_t n, std::int64_t k);

} // namespace dunkl

#endif // DUNKL_RATIONAL_HPP
