#include "dunkl/zrat.hpp"

#include <stdexcept>

namespace dunkl {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(const FieldCtx& ctx, std::vector<CycloScalar> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const CycloScalar& c) { return monomial(c, 0); }

ZPoly ZPoly::monomial(const CycloScalar& c, int n) {
  ZPoly p(c.ctx());
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(n) + 1, CycloScalar(c.ctx()));
  p.c_[static_cast<std::size_t>(n)] = c;
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloScalar ZPoly::coeff(int n) const {
  if (n < 0 || n > degree()) return CycloScalar(*ctx_);
  return c_[static_cast<std::size_t>(n)];
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.empty()) return *this;
  if (!ctx_) ctx_ = o.ctx_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycloScalar(*ctx_));
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] += o.c_[t];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.empty()) return *this;
  if (!ctx_) ctx_ = o.ctx_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycloScalar(*ctx_));
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] -= o.c_[t];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  const FieldCtx* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  ZPoly r;
  r.ctx_ = ctx;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, CycloScalar(*ctx));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      field_fma(r.c_[i + j].coords(), a.c_[i].coords(), b.c_[j].coords(), *ctx);
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::scaled(const CycloScalar& s) const {
  ZPoly r(*ctx_);
  if (s.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

ZPoly ZPoly::shifted(int n) const {
  ZPoly r = *this;
  if (r.c_.empty() || n == 0) return r;
  r.c_.insert(r.c_.begin(), static_cast<std::size_t>(n), CycloScalar(*ctx_));
  return r;
}

ZPoly ZPoly::derivative() const {
  ZPoly r(*ctx_);
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t t = 1; t < c_.size(); ++t) r.c_.push_back(c_[t] * Rational(static_cast<std::int64_t>(t)));
  r.trim();
  return r;
}

ZPoly ZPoly::rotated(long long s) const {
  ZPoly r = *this;
  for (std::size_t t = 1; t < r.c_.size(); ++t)
    if (!r.c_[t].is_zero()) r.c_[t] = r.c_[t].mul_root(s * static_cast<long long>(t));
  return r;
}

ZPoly ZPoly::conj_coeffs() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = c.conj();
  return r;
}

ZPoly ZPoly::reversed() const {
  ZPoly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

CycloScalar ZPoly::eval_root(long long m) const {
  CycloScalar acc(*ctx_);
  for (std::size_t t = c_.size(); t-- > 0;) {
    acc = acc.mul_root(m);
    acc += c_[t];
  }
  return acc;
}

std::complex<double> ZPoly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t t = c_.size(); t-- > 0;) acc = acc * z + c_[t].numeric();
  return acc;
}

bool operator<(const ZPoly& a, const ZPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return a.c_ < b.c_;
}

// ---------------------------------------------------------------- PoleFactor

ZPoly PoleFactor::poly(const FieldCtx& ctx) const {
  std::vector<CycloScalar> c;
  switch (kind) {
  case Kind::Zero:
    c = {CycloScalar(ctx), CycloScalar(ctx, 1)};
    break;
  case Kind::Linear:
    c = {-CycloScalar::root_power(ctx, idx), CycloScalar(ctx, 1)};
    break;
  case Kind::Quadratic:
    c = {-CycloScalar::root_power(ctx, idx), CycloScalar(ctx), CycloScalar(ctx, 1)};
    break;
  }
  return ZPoly(ctx, std::move(c));
}

bool PoleFactor::divides(const ZPoly& p) const {
  if (p.is_zero()) return true;
  switch (kind) {
  case Kind::Zero:
    return p[0].is_zero();
  case Kind::Linear:
    return p.degree() >= 1 && p.eval_root(idx).is_zero();
  case Kind::Quadratic: {
    if (p.degree() < 2) return false;
    const FieldCtx& ctx = p.ctx();
    CycloScalar even(ctx), odd(ctx);
    int top = p.degree();
    for (int t = top; t >= 0; --t) {
      CycloScalar& acc = (t % 2 == 0) ? even : odd;
      acc = acc.mul_root(idx);
      acc += p[static_cast<std::size_t>(t)];
    }
    return even.is_zero() && odd.is_zero();
  }
  }
  return false;
}

ZPoly PoleFactor::divide(const ZPoly& p) const {
  const FieldCtx& ctx = p.ctx();
  if (p.is_zero()) return p;
  const auto& a = p.coeffs();
  const std::size_t n = a.size() - 1;
  std::vector<CycloScalar> q;
  switch (kind) {
  case Kind::Zero:
    q.assign(a.begin() + 1, a.end());
    break;
  case Kind::Linear: {
    q.assign(n, CycloScalar(ctx));
    q[n - 1] = a[n];
    for (std::size_t t = n - 1; t >= 1; --t) q[t - 1] = a[t] + q[t].mul_root(idx);
    break;
  }
  case Kind::Quadratic: {
    q.assign(n - 1, CycloScalar(ctx));
    for (std::size_t t = n; t >= 2; --t) {
      CycloScalar v = a[t];
      if (t + 2 <= n) v += q[t].mul_root(idx);
      q[t - 2] = v;
    }
    break;
  }
  }
  return ZPoly(ctx, std::move(q));
}

// ---------------------------------------------------------------- ZRat

namespace {

std::vector<PoleFactor> factor_base(const FieldCtx& ctx) {
  std::vector<PoleFactor> base;
  base.push_back({PoleFactor::Kind::Zero, 0});
  for (int m = 0; m < ctx.N(); ++m) base.push_back({PoleFactor::Kind::Linear, m});
  for (int j = 1; j < ctx.N(); j += 2) base.push_back({PoleFactor::Kind::Quadratic, j});
  return base;
}

// Splits p into unit * prod(factors); nullopt when a cofactor of positive
// degree is left over.
std::optional<std::pair<CycloScalar, ZRat::Den>> factor_over_base(ZPoly p) {
  if (p.is_zero()) return std::nullopt;
  ZRat::Den den;
  for (const auto& f : factor_base(p.ctx())) {
    if (p.degree() < f.degree()) continue;
    while (p.degree() >= f.degree() && f.divides(p)) {
      p = f.divide(p);
      ++den[f];
    }
    if (p.degree() == 0) break;
  }
  if (p.degree() != 0) return std::nullopt;
  return std::make_pair(p[0], std::move(den));
}

ZPoly expand(const ZRat::Den& den, const FieldCtx& ctx) {
  ZPoly r = ZPoly::constant(CycloScalar(ctx, 1));
  for (const auto& [f, e] : den) {
    ZPoly fp = f.poly(ctx);
    for (int t = 0; t < e; ++t) r = r * fp;
  }
  return r;
}

} // namespace

ZRat::ZRat(const CycloScalar& c) : num_(ZPoly::constant(c)) {}

ZRat ZRat::z_power(const FieldCtx& ctx, int n) {
  if (n >= 0) return ZRat(ZPoly::monomial(CycloScalar(ctx, 1), n));
  Den den;
  den[{PoleFactor::Kind::Zero, 0}] = -n;
  return ZRat(ZPoly::constant(CycloScalar(ctx, 1)), std::move(den));
}

ZRat ZRat::from_fraction(const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  auto fac = factor_over_base(den);
  if (!fac) throw std::domain_error("denominator has roots outside the supported pole set");
  ZRat r(num.scaled(fac->first.inv()), std::move(fac->second));
  r.reduce();
  return r;
}

ZPoly ZRat::den() const { return expand(den_, num_.ctx()); }

bool ZRat::is_one() const { return den_.empty() && num_.degree() == 0 && num_[0].is_one(); }

std::optional<CycloScalar> ZRat::as_constant() const {
  if (!is_constant()) return std::nullopt;
  if (num_.is_zero()) return CycloScalar(num_.ctx());
  return num_[0];
}

void ZRat::reduce_factor(const PoleFactor& f) {
  auto it = den_.find(f);
  if (it == den_.end()) return;
  while (it->second > 0 && num_.degree() >= f.degree() && f.divides(num_)) {
    num_ = f.divide(num_);
    --it->second;
  }
  if (it->second == 0) den_.erase(it);
}

void ZRat::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<PoleFactor> keys;
  keys.reserve(den_.size());
  for (const auto& kv : den_) keys.push_back(kv.first);
  for (const auto& f : keys) reduce_factor(f);
}

ZRat ZRat::operator-() const { return ZRat(-num_, den_); }

ZRat& ZRat::operator+=(const ZRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const FieldCtx& ctx = num_.ctx();
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  Den lcm = den_;
  for (const auto& [f, e] : o.den_) {
    int& cur = lcm[f];
    cur = std::max(cur, e);
  }
  ZPoly a = num_;
  ZPoly b = o.num_;
  std::vector<PoleFactor> shared;
  for (const auto& [f, e] : lcm) {
    auto ia = den_.find(f);
    auto ib = o.den_.find(f);
    int ea = ia == den_.end() ? 0 : ia->second;
    int eb = ib == o.den_.end() ? 0 : ib->second;
    if (ea == eb) shared.push_back(f);
    if (ea < e || eb < e) {
      ZPoly fp = f.poly(ctx);
      for (int t = ea; t < e; ++t) a = a * fp;
      for (int t = eb; t < e; ++t) b = b * fp;
    }
  }
  num_ = a + b;
  den_ = std::move(lcm);
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& f : shared) reduce_factor(f);
  return *this;
}

ZRat& ZRat::operator-=(const ZRat& o) { return *this += -o; }

ZRat operator*(const ZRat& a, const ZRat& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  ZPoly na = a.num_;
  ZPoly nb = b.num_;
  ZRat::Den den = a.den_;
  for (const auto& [f, e] : b.den_) den[f] += e;
  // cross-cancel: na is coprime to a.den, nb to b.den
  for (auto& [f, e] : den) {
    auto ib = b.den_.find(f);
    int budget_b = ib == b.den_.end() ? 0 : ib->second;
    while (budget_b > 0 && na.degree() >= f.degree() && f.divides(na)) {
      na = f.divide(na);
      --budget_b;
      --e;
    }
    auto ia = a.den_.find(f);
    int budget_a = ia == a.den_.end() ? 0 : ia->second;
    while (budget_a > 0 && nb.degree() >= f.degree() && f.divides(nb)) {
      nb = f.divide(nb);
      --budget_a;
      --e;
    }
  }
  std::erase_if(den, [](const auto& kv) { return kv.second == 0; });
  return ZRat(na * nb, std::move(den));
}

ZRat& ZRat::operator*=(const ZRat& o) { return *this = *this * o; }

ZRat ZRat::scaled(const CycloScalar& s) const {
  if (s.is_zero()) return ZRat(ZPoly(num_.ctx()));
  return ZRat(num_.scaled(s), den_);
}

ZRat ZRat::scaled(const Rational& q) const { return scaled(CycloScalar(num_.ctx(), q)); }

std::optional<ZRat> ZRat::inverse() const {
  auto fac = factor_over_base(num_);
  if (!fac) return std::nullopt;
  const FieldCtx& ctx = num_.ctx();
  ZRat r(expand(den_, ctx).scaled(fac->first.inv()), std::move(fac->second));
  r.reduce();
  return r;
}

std::complex<double> ZRat::eval(std::complex<double> z) const {
  std::complex<double> v = num_.eval(z);
  const FieldCtx& ctx = num_.ctx();
  for (const auto& [f, e] : den_) {
    std::complex<double> fv = f.poly(ctx).eval(z);
    for (int t = 0; t < e; ++t) v /= fv;
  }
  return v;
}

namespace {

std::string scalar_factor_text(const CycloScalar& c, bool& negative) {
  // A single-coordinate scalar prints bare with its sign pulled out; anything
  // else is parenthesised.
  int nonzero = 0;
  std::size_t where = 0;
  auto coords = c.coords();
  for (std::size_t t = 0; t < coords.size(); ++t)
    if (!coords[t].is_zero()) {
      ++nonzero;
      where = t;
    }
  negative = false;
  if (nonzero == 1) {
    negative = coords[where].sign() < 0;
    CycloScalar mag = negative ? -c : c;
    return mag.str();
  }
  return "(" + c.str() + ")";
}

std::string factor_text(const PoleFactor& f) {
  auto root = [](int m) { return m == 0 ? std::string("1") : m == 1 ? std::string("zeta") : "zeta^" + std::to_string(m); };
  switch (f.kind) {
  case PoleFactor::Kind::Zero:
    return "z";
  case PoleFactor::Kind::Linear:
    return "(z - " + root(f.idx) + ")";
  case PoleFactor::Kind::Quadratic:
    return "(z^2 - " + root(f.idx) + ")";
  }
  return {};
}

} // namespace

std::string ZRat::str() const {
  if (num_.is_zero()) return "0";
  if (den_.empty() && num_.degree() == 0) return num_[0].str();
  std::string out;
  int terms = 0;
  for (int n = 0; n <= num_.degree(); ++n) {
    const CycloScalar& c = num_[static_cast<std::size_t>(n)];
    if (c.is_zero()) continue;
    ++terms;
    bool neg = false;
    std::string s = scalar_factor_text(c, neg);
    std::string zpart = n == 0 ? "" : n == 1 ? "z" : "z^" + std::to_string(n);
    std::string term;
    if (zpart.empty())
      term = s;
    else if (s == "1")
      term = zpart;
    else
      term = s + "*" + zpart;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  if (den_.empty()) return out;
  std::string den;
  for (const auto& [f, e] : den_) {
    if (!den.empty()) den += "*";
    den += factor_text(f);
    if (e > 1) den += "^" + std::to_string(e);
  }
  const bool bare = den_.size() == 1 && den_.begin()->second == 1 && den.front() == '(';
  return "(" + out + ")/" + (bare ? den : "(" + den + ")");
}

ZRat d_phi(const ZRat& f) {
  const FieldCtx& ctx = f.ctx();
  if (f.is_zero() || f.is_constant()) return ZRat(ZPoly(ctx));
  CycloScalar iu = CycloScalar::imag_unit(ctx);
  ZPoly z1 = ZPoly::monomial(CycloScalar(ctx, 1), 1);
  if (f.den_.empty()) {
    ZRat r(f.num_.derivative().scaled(iu) * z1);
    return r;
  }
  // (n/D)' = (n' P - n sum_f e_f f' P/f) / (D P), P = prod of distinct factors.
  std::vector<ZPoly> polys;
  ZPoly radical = ZPoly::constant(CycloScalar(ctx, 1));
  for (const auto& [fac, e] : f.den_) {
    polys.push_back(fac.poly(ctx));
    radical = radical * polys.back();
  }
  ZPoly num = f.num_.derivative() * radical;
  std::size_t idx = 0;
  for (const auto& [fac, e] : f.den_) {
    ZPoly cof = fac.divide(radical);
    ZPoly term = polys[idx++].derivative() * cof;
    num -= (f.num_ * term).scaled(CycloScalar(ctx, Rational(e)));
  }
  ZRat::Den den = f.den_;
  for (auto& [fac, e] : den) ++e;
  ZRat r((num * z1).scaled(iu), std::move(den));
  r.reduce();
  return r;
}

ZRat rotate(const ZRat& f, int times) {
  const FieldCtx& ctx = f.ctx();
  if (f.is_zero()) return f;
  const long long n = ctx.N();
  const long long s = ((static_cast<long long>(times) * ctx.rho_exp()) % n + n) % n;
  if (s == 0) return f;
  ZRat::Den den;
  long long den_deg = 0;
  for (const auto& [fac, e] : f.den_) {
    PoleFactor g = fac;
    if (fac.kind == PoleFactor::Kind::Linear) g.idx = static_cast<int>(((fac.idx - s) % n + n) % n);
    if (fac.kind == PoleFactor::Kind::Quadratic) g.idx = static_cast<int>(((fac.idx - 2 * s) % n + n) % n);
    den[g] = e;
    den_deg += static_cast<long long>(fac.degree()) * e;
  }
  ZPoly num = f.num_.rotated(s);
  num = num.scaled(CycloScalar::root_power(ctx, -s * den_deg));
  return ZRat(std::move(num), std::move(den));
}

ZRat reflect(const ZRat& f) {
  const FieldCtx& ctx = f.ctx();
  if (f.is_zero() || f.is_constant()) return f;
  const long long n = ctx.N();
  long long zexp = -static_cast<long long>(f.num_.degree());
  long long root_sum = 0;
  long long count = 0;
  ZRat::Den den;
  for (const auto& [fac, e] : f.den_) {
    if (fac.kind == PoleFactor::Kind::Zero) {
      zexp += e;
      continue;
    }
    zexp += static_cast<long long>(fac.degree()) * e;
    root_sum += static_cast<long long>(fac.idx) * e;
    count += e;
    den[{fac.kind, static_cast<int>(((-fac.idx) % n + n) % n)}] = e;
  }
  ZPoly num = f.num_.reversed();
  CycloScalar unit = CycloScalar::root_power(ctx, -root_sum);
  if (count % 2 == 1) unit = -unit;
  num = num.scaled(unit);
  if (zexp >= 0)
    num = num.shifted(static_cast<int>(zexp));
  else
    den[{PoleFactor::Kind::Zero, 0}] = static_cast<int>(-zexp);
  ZRat r(std::move(num), std::move(den));
  r.reduce();
  return r;
}

ZRat conj_coeff(const ZRat& f) {
  if (f.is_zero()) return f;
  const long long n = f.ctx().N();
  ZRat::Den den;
  for (const auto& [fac, e] : f.den_) {
    PoleFactor g = fac;
    if (fac.kind != PoleFactor::Kind::Zero) g.idx = static_cast<int>(((-fac.idx) % n + n) % n);
    den[g] = e;
  }
  return reflect(ZRat(f.num_.conj_coeffs(), std::move(den)));
}

// ---------------------------------------------------------------- trig

namespace {

// Polynomial sum of c_t z^{e_t}.
ZPoly sparse(const FieldCtx& ctx, std::initializer_list<std::pair<CycloScalar, int>> terms) {
  ZPoly p(ctx);
  for (const auto& [c, e] : terms) p += ZPoly::monomial(c, e);
  return p;
}

} // namespace

ZRat trig(TrigKind kind, int j, const FieldCtx& ctx) {
  const int k = ctx.k();
  const CycloScalar one(ctx, 1);
  const CycloScalar iu = CycloScalar::imag_unit(ctx);
  const CycloScalar four(ctx, 4);
  // Shifted kinds use u = rho^j z, so u^2 = rho^{2j} z^2.
  const CycloScalar rho2j = CycloScalar::root_power(ctx, 2LL * j * ctx.rho_exp());
  auto half_check = [&] {
    if (k % 2 != 0) throw std::invalid_argument("half-angle trig coefficients require even k");
  };
  switch (kind) {
  case TrigKind::TanShift:
    return ZRat::from_fraction(sparse(ctx, {{-(iu * rho2j), 2}, {iu, 0}}), sparse(ctx, {{rho2j, 2}, {one, 0}}));
  case TrigKind::CotShift:
    return ZRat::from_fraction(sparse(ctx, {{iu * rho2j, 2}, {iu, 0}}), sparse(ctx, {{rho2j, 2}, {-one, 0}}));
  case TrigKind::Sec2Shift: {
    ZPoly d = sparse(ctx, {{rho2j, 2}, {one, 0}});
    return ZRat::from_fraction(sparse(ctx, {{four * rho2j, 2}}), d * d);
  }
  case TrigKind::Csc2Shift: {
    ZPoly d = sparse(ctx, {{rho2j, 2}, {-one, 0}});
    return ZRat::from_fraction(sparse(ctx, {{-(four * rho2j), 2}}), d * d);
  }
  case TrigKind::SecK:
    return ZRat::from_fraction(sparse(ctx, {{CycloScalar(ctx, 2), k}}), sparse(ctx, {{one, 2 * k}, {one, 0}}));
  case TrigKind::TanK:
    return ZRat::from_fraction(sparse(ctx, {{-iu, 2 * k}, {iu, 0}}), sparse(ctx, {{one, 2 * k}, {one, 0}}));
  case TrigKind::CotK:
    return ZRat::from_fraction(sparse(ctx, {{iu, 2 * k}, {iu, 0}}), sparse(ctx, {{one, 2 * k}, {-one, 0}}));
  case TrigKind::Csc2K: {
    ZPoly d = sparse(ctx, {{one, 2 * k}, {-one, 0}});
    return ZRat::from_fraction(sparse(ctx, {{-four, 2 * k}}), d * d);
  }
  case TrigKind::Sec2K: {
    ZPoly d = sparse(ctx, {{one, 2 * k}, {one, 0}});
    return ZRat::from_fraction(sparse(ctx, {{four, 2 * k}}), d * d);
  }
  case TrigKind::HalfSumInv2: {
    half_check();
    // cos v + sin v = ((1 - i) w^2 + (1 + i)) / (2w), w = z^{k/2}
    ZPoly d = sparse(ctx, {{one - iu, k}, {one + iu, 0}});
    return ZRat::from_fraction(sparse(ctx, {{four, k}}), d * d);
  }
  case TrigKind::HalfDiffInv2: {
    half_check();
    ZPoly d = sparse(ctx, {{one + iu, k}, {one - iu, 0}});
    return ZRat::from_fraction(sparse(ctx, {{four, k}}), d * d);
  }
  }
  throw std::invalid_argument("unknown trig kind");
}

ZRat trig(TrigKind kind, const FieldCtx& ctx) { return trig(kind, 0, ctx); }

} // namespace dunkl
