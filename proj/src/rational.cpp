#include "dunkl/rational.hpp"

#include <limits>
#include <stdexcept>

namespace dunkl {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// Keep |values| <= INT64_MAX so negation never overflows.
bool fits(i128 v) { return v <= kMax && v >= -kMax; }

std::uint64_t ugcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(ugcd(a < 0 ? 0 - static_cast<std::uint64_t>(a) : a,
                                        b < 0 ? 0 - static_cast<std::uint64_t>(b) : b));
}

unsigned __int128 ugcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpq_class make_mpq(std::int64_t n, std::int64_t d) {
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), n);
  mpz_set_si(q.get_den_mpz_t(), d);
  return q;
}

mpz_class from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? 0 - static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  assign_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  return Rational(q);
}

void Rational::assign_big(mpq_class q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = mpz_get_si(q.get_num_mpz_t());
    long d = mpz_get_si(q.get_den_mpz_t());
    if (n != std::numeric_limits<long>::min() && d != std::numeric_limits<long>::min()) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

void Rational::assign_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  unsigned __int128 un = n < 0 ? 0 - static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
  auto g = static_cast<i128>(ugcd128(un, static_cast<unsigned __int128>(d)));
  n /= g;
  d /= g;
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q;
  q.get_num() = from_i128(n);
  q.get_den() = from_i128(d);
  assign_big(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : make_mpq(num_, den_); }

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!big_ && !o.big_) {
    std::int64_t d1 = gcd64(den_, o.den_);
    if (d1 == 1) {
      assign_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
      return *this;
    }
    i128 t = static_cast<i128>(num_) * (o.den_ / d1) + static_cast<i128>(o.num_) * (den_ / d1);
    assign_i128(t, static_cast<i128>(den_ / d1) * o.den_);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Rational();
  if (!big_ && !o.big_) {
    std::int64_t g1 = gcd64(num_, o.den_);
    std::int64_t g2 = gcd64(o.num_, den_);
    std::int64_t n = 0;
    std::int64_t d = 0;
    if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
        !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) && n != std::numeric_limits<std::int64_t>::min()) {
      num_ = n;
      den_ = d;
      return *this;
    }
    assign_i128(static_cast<i128>(num_ / g1) * (o.num_ / g2), static_cast<i128>(den_ / g2) * (o.den_ / g1));
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  if (!o.big_) {
    Rational inv;
    inv.assign_i128(o.den_, o.num_);
    return *this *= inv;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  Rational t = a;
  t *= b;
  *this += t;
}

void Rational::mul_int(std::int64_t n) {
  if (n == 1) return;
  if (n == -1) {
    *this = -*this;
    return;
  }
  *this *= Rational(n);
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false; // canonical: a big value never fits inline
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

Rational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

} // namespace dunkl
