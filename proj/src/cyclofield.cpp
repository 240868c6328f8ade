#include "dunkl/cyclofield.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dunkl {

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact quotient num / den for monic den; throws if the division leaves a remainder.
IntPoly poly_exact_div(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: degree underflow");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t t = num.size(); t-- > dd;) {
    long long c = num[t];
    q[t - dd] = c;
    if (c == 0) continue;
    for (std::size_t s = 0; s <= dd; ++s) num[t - dd + s] -= c * den[s];
  }
  for (std::size_t t = 0; t < dd; ++t)
    if (num[t] != 0) throw std::logic_error("cyclotomic: inexact division");
  return q;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder and quotient of a / b over Q.
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational());
  Rational lead_inv = Rational(1) / b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t s = 0; s < b.size(); ++s) a[shift + s] -= c * b[s];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_mul(a[i], b[j]);
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

} // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  IntPoly den{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  return poly_exact_div(std::move(num), den);
}

FieldPtr ctx_new(int k, int max_k) {
  if (k < 1) throw std::invalid_argument("dihedral index k must be >= 1");
  if (k > max_k)
    throw std::invalid_argument("dihedral index k=" + std::to_string(k) + " exceeds the configured maximum " +
                                std::to_string(max_k));
  std::shared_ptr<FieldCtx> ctx(new FieldCtx());
  ctx->k_ = k;
  ctx->n_ = std::lcm(4, 2 * k);
  ctx->phi_ = cyclotomic_polynomial(ctx->n_);
  ctx->deg_ = static_cast<int>(ctx->phi_.size()) - 1;

  const int d = ctx->deg_;
  std::vector<long long> cur(static_cast<std::size_t>(d), 0);
  cur[0] = 1;
  ctx->roots_.resize(static_cast<std::size_t>(ctx->n_));
  for (int j = 0; j < ctx->n_; ++j) {
    auto& row = ctx->roots_[static_cast<std::size_t>(j)];
    for (int t = 0; t < d; ++t)
      if (cur[static_cast<std::size_t>(t)] != 0) row.push_back({t, cur[static_cast<std::size_t>(t)]});
    // multiply by x, reduce with the monic Phi_N
    long long top = cur[static_cast<std::size_t>(d - 1)];
    for (int t = d - 1; t > 0; --t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)];
    cur[0] = 0;
    if (top != 0)
      for (int t = 0; t < d; ++t) cur[static_cast<std::size_t>(t)] -= top * ctx->phi_[static_cast<std::size_t>(t)];
  }
  ctx->powers_ = ctx->roots_;
  return ctx;
}

std::complex<double> FieldCtx::zeta_numeric(int j) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_));
}

void field_fma(std::span<Rational> out, std::span<const Rational> x, std::span<const Rational> y,
               const FieldCtx& ctx) {
  const std::size_t d = static_cast<std::size_t>(ctx.deg());
  thread_local std::vector<Rational> prod;
  prod.assign(2 * d - 1, Rational());
  bool any = false;
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      prod[i + j].add_mul(x[i], y[j]);
      any = true;
    }
  }
  if (!any) return;
  for (std::size_t t = 0; t < d; ++t) out[t] += prod[t];
  for (std::size_t t = d; t < 2 * d - 1; ++t) {
    if (prod[t].is_zero()) continue;
    for (const auto& e : ctx.power(static_cast<int>(t))) {
      Rational c = prod[t];
      c.mul_int(e.coeff);
      out[static_cast<std::size_t>(e.index)] += c;
    }
  }
}

CycloScalar CycloScalar::root_power(const FieldCtx& ctx, long long j) {
  CycloScalar r(ctx);
  long long n = ctx.N();
  int jj = static_cast<int>(((j % n) + n) % n);
  for (const auto& e : ctx.root(jj)) r.c_[static_cast<std::size_t>(e.index)] = Rational(e.coeff);
  return r;
}

bool CycloScalar::is_zero() const {
  for (const auto& q : c_)
    if (!q.is_zero()) return false;
  return true;
}

bool CycloScalar::is_one() const { return c_[0].is_one() && is_rational(); }

bool CycloScalar::is_rational() const {
  for (std::size_t t = 1; t < c_.size(); ++t)
    if (!c_[t].is_zero()) return false;
  return true;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar r(*a.ctx_);
  field_fma(r.c_, a.c_, b.c_, *a.ctx_);
  return r;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) { return *this = *this * o; }

CycloScalar& CycloScalar::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

CycloScalar CycloScalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // Extended Euclid: track s with s * a == r (mod Phi_N).
  QPoly a(c_.begin(), c_.end());
  trim(a);
  QPoly m;
  for (long long v : ctx_->phiN()) m.emplace_back(v);
  QPoly r0 = m, r1 = a;
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  Rational c = Rational(1) / r1[0];
  QPoly q, rem;
  qdivmod(s1, m, q, rem);
  CycloScalar out(*ctx_);
  for (std::size_t t = 0; t < rem.size(); ++t) out.c_[t] = rem[t] * c;
  return out;
}

CycloScalar CycloScalar::galois(int m) const {
  CycloScalar r(*ctx_);
  const long long n = ctx_->N();
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t].is_zero()) continue;
    int j = static_cast<int>(((static_cast<long long>(t) * m) % n + n) % n);
    for (const auto& e : ctx_->root(j)) {
      Rational v = c_[t];
      v.mul_int(e.coeff);
      r.c_[static_cast<std::size_t>(e.index)] += v;
    }
  }
  return r;
}

CycloScalar CycloScalar::conj() const { return galois(ctx_->N() - 1); }

CycloScalar CycloScalar::mul_root(long long j) const {
  CycloScalar r(*ctx_);
  const long long n = ctx_->N();
  const long long base = ((j % n) + n) % n;
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t].is_zero()) continue;
    int jj = static_cast<int>((base + static_cast<long long>(t)) % n);
    for (const auto& e : ctx_->root(jj)) {
      Rational v = c_[t];
      v.mul_int(e.coeff);
      r.c_[static_cast<std::size_t>(e.index)] += v;
    }
  }
  return r;
}

std::complex<double> CycloScalar::numeric() const {
  std::complex<double> acc = 0.0;
  for (std::size_t t = 0; t < c_.size(); ++t)
    if (!c_[t].is_zero()) acc += c_[t].to_double() * ctx_->zeta_numeric(static_cast<int>(t));
  return acc;
}

std::complex<double> numeric_embed(const CycloScalar& x) { return x.numeric(); }

std::string CycloScalar::str() const {
  std::string out;
  for (std::size_t t = 0; t < c_.size(); ++t) {
    const Rational& q = c_[t];
    if (q.is_zero()) continue;
    bool neg = q.sign() < 0;
    Rational mag = neg ? -q : q;
    std::string term;
    if (t == 0) {
      term = mag.str();
    } else {
      std::string root = t == 1 ? "zeta" : "zeta^" + std::to_string(t);
      term = mag.is_one() ? root : mag.str() + "*" + root;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

} // namespace dunkl
