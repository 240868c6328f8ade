#include "dunkl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dunkl {

Jet Jet::truncated(int order) const {
  Jet r(order);
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b) r.at(a, b) = at(a, b);
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  for (int a = 0; a <= order_; ++a)
    for (int b = 0; a + b <= order_; ++b) at(a, b) += o.at(a, b);
  return *this;
}

Jet Jet::scaled(cplx s) const {
  Jet r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Jet operator*(const Jet& x, const Jet& y) {
  const int n = std::min(x.order_, y.order_);
  Jet r(n);
  for (int a1 = 0; a1 <= n; ++a1)
    for (int b1 = 0; a1 + b1 <= n; ++b1) {
      const cplx xv = x.at(a1, b1);
      if (xv == cplx{}) continue;
      for (int a2 = 0; a1 + a2 <= n; ++a2)
        for (int b2 = 0; a1 + a2 + b1 + b2 <= n; ++b2) r.at(a1 + a2, b1 + b2) += xv * y.at(a2, b2);
    }
  return r;
}

Jet Jet::reciprocal() const {
  Jet g(order_);
  const cplx inv0 = 1.0 / at(0, 0);
  for (int t = 0; t <= order_; ++t) {
    for (int a = 0; a <= t; ++a) {
      const int b = t - a;
      if (t == 0) {
        g.at(0, 0) = inv0;
        continue;
      }
      cplx s{};
      for (int a1 = 0; a1 <= a; ++a1)
        for (int b1 = 0; b1 <= b; ++b1)
          if (a1 + b1 > 0) s += at(a1, b1) * g.at(a - a1, b - b1);
      g.at(a, b) = -s * inv0;
    }
  }
  return g;
}

Jet Jet::d_r() const {
  Jet r(order_ - 1);
  for (int a = 0; a <= order_ - 1; ++a)
    for (int b = 0; a + b <= order_ - 1; ++b) r.at(a, b) = static_cast<double>(a + 1) * at(a + 1, b);
  return r;
}

Jet Jet::d_phi() const {
  Jet r(order_ - 1);
  for (int a = 0; a <= order_ - 1; ++a)
    for (int b = 0; a + b <= order_ - 1; ++b) r.at(a, b) = static_cast<double>(b + 1) * at(a, b + 1);
  return r;
}

Jet Jet::flipped() const {
  Jet r = *this;
  for (int a = 0; a <= order_; ++a)
    for (int b = 1; a + b <= order_; b += 2) r.at(a, b) = -r.at(a, b);
  return r;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Series in one variable, coefficients of t^0..t^n.
using Series = std::vector<cplx>;

// sum_n c[n] z^(lo+n) at z = z0 exp(i t)
Series laurent_series(const std::vector<cplx>& c, int lo, double phi, int order) {
  Series s(static_cast<std::size_t>(order + 1));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == cplx{}) continue;
    const double e = lo + static_cast<double>(n);
    cplx term = c[n] * std::polar(1.0, e * phi);
    for (int b = 0; b <= order; ++b) {
      s[static_cast<std::size_t>(b)] += term;
      term *= cplx(0, e) / static_cast<double>(b + 1);
    }
  }
  return s;
}

Series series_div(const Series& x, const Series& y) {
  const std::size_t n = x.size();
  Series q(n);
  for (std::size_t t = 0; t < n; ++t) {
    cplx s = x[t];
    for (std::size_t u = 1; u <= t; ++u) s -= y[u] * q[t - u];
    q[t] = s / y[0];
  }
  return q;
}

// (r0 + t)^m
Series rpow_series(double r0, int m, int order) {
  Series s(static_cast<std::size_t>(order + 1));
  double coef = std::pow(r0, m);
  for (int n = 0; n <= order; ++n) {
    s[static_cast<std::size_t>(n)] = coef;
    coef *= static_cast<double>(m - n) / (static_cast<double>(n + 1) * r0);
  }
  return s;
}

// (r0 + t)^s exp(c (r0 + t)^2)
Series radial_series(double r0, int s_exp, double c, int order) {
  const std::size_t n = static_cast<std::size_t>(order + 1);
  // h(t) = c (2 r0 t + t^2); E = exp(h) via n E_n = sum_m m h_m E_{n-m}
  Series h(n), e(n);
  if (n > 1) h[1] = 2 * c * r0;
  if (n > 2) h[2] = c;
  e[0] = 1;
  for (std::size_t t = 1; t < n; ++t) {
    cplx s{};
    for (std::size_t m = 1; m <= t; ++m) s += static_cast<double>(m) * h[m] * e[t - m];
    e[t] = s / static_cast<double>(t);
  }
  const Series p = rpow_series(r0, s_exp, order);
  Series out(n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t u = 0; u <= t; ++u) out[t] += p[u] * e[t - u];
  const double scale = std::exp(c * r0 * r0);
  for (auto& v : out) v *= scale;
  return out;
}

Jet outer(const Series& r_part, const Series& phi_part, int order) {
  Jet j(order);
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b)
      j.at(a, b) = r_part[static_cast<std::size_t>(a)] * phi_part[static_cast<std::size_t>(b)];
  return j;
}

// Operators with every exact coefficient replaced by complex doubles.
struct NumZ {
  std::vector<cplx> num, den;
};

struct NumMonomial {
  CoeffKey key;
  NumZ f;
};

struct NumTerm {
  OpKey key;
  std::vector<NumMonomial> coeff;
};

struct NumOp {
  std::vector<NumTerm> terms;
  int order = 0;
};

using NumWord = std::vector<NumOp>;

std::vector<cplx> numeric_poly(const ZPoly& p) {
  std::vector<cplx> v;
  for (const auto& c : p.coeffs()) v.push_back(c.numeric());
  return v;
}

NumOp compile(const OpExpr& x) {
  NumOp op;
  for (const auto& [key, c] : x.terms()) {
    NumTerm t{key, {}};
    for (const auto& [ck, f] : c.terms()) t.coeff.push_back({ck, {numeric_poly(f.num()), numeric_poly(f.den())}});
    op.terms.push_back(std::move(t));
    op.order = std::max(op.order, key.p + key.q);
  }
  return op;
}

std::vector<NumWord> compile(const OpSum& sum) {
  std::vector<NumWord> out;
  for (const auto& w : sum) {
    NumWord nw;
    for (const auto& x : w) nw.push_back(compile(x));
    out.push_back(std::move(nw));
  }
  return out;
}

// The 4k points g(r, phi) for g in D_2k: index e*2k + j is phi -> (-1)^e phi + j pi/k.
struct Orbit {
  int k;
  SamplePoint pt;

  int size() const { return 4 * k; }
  int index(int e, int j) const {
    const int two_k = 2 * k;
    return e * two_k + ((j % two_k) + two_k) % two_k;
  }
  double phi(int idx) const {
    const int two_k = 2 * k;
    const int e = idx / two_k, j = idx % two_k;
    return (e ? -pt.phi : pt.phi) + j * kPi / k;
  }
  // Source point and reflection flag for (R^i I^e h) at idx.
  std::pair<int, bool> source(int idx, int i, int e) const {
    const int two_k = 2 * k;
    const int pe = idx / two_k, pj = idx % two_k;
    if (e == 0) return {index(pe, pj + i), false};
    return {index(1 - pe, -(pj + i)), true};
  }
};

cplx param_power(const SamplePoint& pt, const CoeffKey& key) {
  return std::pow(pt.a, key.a_deg) * std::pow(pt.b, key.b_deg) * std::pow(pt.w2, key.w2_deg);
}

Jet coefficient_jet(const std::vector<NumMonomial>& coeff, const SamplePoint& pt, double phi, int order) {
  Jet out(order);
  for (const auto& m : coeff) {
    const Series z = series_div(laurent_series(m.f.num, 0, phi, order), laurent_series(m.f.den, 0, phi, order));
    const Series r = rpow_series(pt.r, m.key.r_exp, order);
    out += outer(r, z, order).scaled(param_power(pt, m.key));
  }
  return out;
}

cplx evaluate_word(const NumWord& w, const std::vector<Jet>& base, const Orbit& orbit) {
  int need = 0;
  for (const auto& op : w) need += op.order;
  std::vector<Jet> table(static_cast<std::size_t>(orbit.size()));
  for (int p = 0; p < orbit.size(); ++p) table[static_cast<std::size_t>(p)] = base[static_cast<std::size_t>(p)].truncated(need);
  for (std::size_t idx = w.size(); idx-- > 0;) {
    const NumOp& op = w[idx];
    const int out_order = need - op.order;
    const int npts = idx == 0 ? 1 : orbit.size();
    std::vector<Jet> next(static_cast<std::size_t>(orbit.size()));
    for (int p = 0; p < npts; ++p) {
      Jet acc(out_order);
      for (const auto& t : op.terms) {
        auto [src, flip] = orbit.source(p, t.key.i, t.key.e);
        Jet h = flip ? table[static_cast<std::size_t>(src)].flipped() : table[static_cast<std::size_t>(src)];
        for (int s = 0; s < t.key.p; ++s) h = h.d_r();
        for (int s = 0; s < t.key.q; ++s) h = h.d_phi();
        acc += coefficient_jet(t.coeff, orbit.pt, orbit.phi(p), out_order) * h.truncated(out_order);
      }
      next[static_cast<std::size_t>(p)] = std::move(acc);
    }
    table = std::move(next);
    need = out_order;
  }
  return table[0].value();
}

std::vector<Jet> base_table(const TestFunc& f, const Orbit& orbit, int order, bool symmetrise) {
  const Series radial = radial_series(orbit.pt.r, f.s, f.c, order);
  std::vector<Jet> plain(static_cast<std::size_t>(orbit.size()));
  for (int p = 0; p < orbit.size(); ++p)
    plain[static_cast<std::size_t>(p)] = outer(radial, laurent_series(f.p, f.lo, orbit.phi(p), order), order);
  if (!symmetrise) return plain;
  std::vector<Jet> sym(static_cast<std::size_t>(orbit.size()));
  for (int p = 0; p < orbit.size(); ++p) {
    Jet acc(order);
    for (int i = 0; i < 2 * orbit.k; ++i)
      for (int e = 0; e < 2; ++e) {
        auto [src, flip] = orbit.source(p, i, e);
        acc += flip ? plain[static_cast<std::size_t>(src)].flipped() : plain[static_cast<std::size_t>(src)];
      }
    sym[static_cast<std::size_t>(p)] = std::move(acc);
  }
  return sym;
}

int max_order(const std::vector<NumWord>& words) {
  int m = 0;
  for (const auto& w : words) {
    int o = 0;
    for (const auto& op : w) o += op.order;
    m = std::max(m, o);
  }
  return m;
}

cplx evaluate_compiled(const std::vector<NumWord>& words, const TestFunc& f, const SamplePoint& pt, int k, bool symmetrise) {
  const Orbit orbit{k, pt};
  const int order = max_order(words);
  const std::vector<Jet> base = base_table(f, orbit, order, symmetrise);
  cplx total{};
  for (const auto& w : words) total += evaluate_word(w, base, orbit);
  return total;
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

double sector_phi(int k, std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> u(0.0, kPi / (2 * k));
  for (;;) {
    const double phi = u(rng);
    if (std::abs(std::sin(k * phi)) >= margin && std::abs(std::cos(k * phi)) >= margin) return phi;
  }
}

double deviation(cplx l, cplx r) {
  const double m = std::max(std::abs(l), std::abs(r));
  return m == 0 ? 0 : std::abs(l - r) / m;
}

template <class Sample>
OracleReport run_trials(const OracleConfig& cfg, Sample sample) {
  OracleReport rep;
  rep.trials = cfg.trials;
  for (int t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 rng = trial_rng(cfg.seed, t);
    auto [l, r] = sample(rng);
    for (int redraw = 0; redraw < cfg.redraw_cap && std::max(std::abs(l), std::abs(r)) < cfg.degenerate; ++redraw)
      std::tie(l, r) = sample(rng);
    // A sample that stays degenerate after the cap is judged on absolute error.
    const double dev = std::max(std::abs(l), std::abs(r)) < cfg.degenerate ? std::abs(l - r) : deviation(l, r);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (!(dev <= cfg.tol)) ++rep.failed_trials;
  }
  rep.pass = rep.failed_trials == 0;
  return rep;
}

} // namespace

SamplePoint draw_point(int k, std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> r(0.5, 2.0), par(0.5, 3.0);
  SamplePoint pt;
  pt.r = r(rng);
  pt.phi = sector_phi(k, rng, margin);
  pt.a = par(rng);
  pt.b = par(rng);
  pt.w2 = par(rng);
  return pt;
}

TestFunc draw_func(std::mt19937_64& rng) {
  // Dense Laurent polynomials: sparse ones can sit in the kernel of a residual.
  std::uniform_int_distribution<int> s(-1, 3), lo(-5, -3), len(7, 10);
  std::uniform_real_distribution<double> c(-1.0, -0.1), coef(-1.0, 1.0);
  TestFunc f;
  f.s = s(rng);
  f.c = c(rng);
  f.lo = lo(rng);
  f.p.resize(static_cast<std::size_t>(len(rng)));
  for (auto& v : f.p) v = cplx(coef(rng), coef(rng));
  return f;
}

cplx evaluate(const OpSum& sum, const TestFunc& f, const SamplePoint& pt, int k, bool symmetrise) {
  return evaluate_compiled(compile(sum), f, pt, k, symmetrise);
}

cplx evaluate(const OpExpr& x, const TestFunc& f, const SamplePoint& pt, bool symmetrise) {
  return evaluate(OpSum{{x}}, f, pt, x.k(), symmetrise);
}

OpSum adjoint_words(const OpSum& sum) {
  OpSum out;
  for (const auto& w : sum) {
    if (w.empty()) continue;
    const FieldPtr& ctx = w.front().ctx_ptr();
    const OpExpr dr_adj = -OpExpr::d_r(ctx) - OpExpr::r_power(ctx, -1);
    const OpExpr dphi_adj = -OpExpr::d_phi(ctx);
    // (W_1 ... W_n)^+ = W_n^+ ... W_1^+, each factor expanded term by term.
    OpSum acc{OpWord{}};
    for (std::size_t idx = w.size(); idx-- > 0;) {
      OpSum factor;
      for (const auto& [key, c] : w[idx].terms()) {
        OpWord t;
        if (key.e) t.push_back(OpExpr::refl(ctx));
        if (key.i) t.push_back(OpExpr::rot(ctx, -key.i));
        for (int s = 0; s < key.q; ++s) t.push_back(dphi_adj);
        for (int s = 0; s < key.p; ++s) t.push_back(dr_adj);
        t.push_back(OpExpr::coeff(ctx, c.map_z([](const ZRat& f) { return conj_coeff(f); })));
        factor.push_back(std::move(t));
      }
      OpSum next;
      for (const auto& left : acc)
        for (const auto& right : factor) next.push_back(concat(left, right));
      acc = std::move(next);
    }
    for (auto& x : acc) out.push_back(std::move(x));
  }
  return out;
}

OracleReport numeric_check(const OpSum& lhs, const OpSum& rhs, int k, const OracleConfig& cfg, bool symmetrise) {
  const auto l = compile(lhs);
  const auto r = compile(rhs);
  return run_trials(cfg, [&](std::mt19937_64& rng) {
    const SamplePoint pt = draw_point(k, rng, cfg.margin);
    const TestFunc f = draw_func(rng);
    return std::pair{evaluate_compiled(l, f, pt, k, symmetrise), evaluate_compiled(r, f, pt, k, symmetrise)};
  });
}

OracleReport numeric_check(const OpExpr& lhs, const OpExpr& rhs, const OracleConfig& cfg) {
  require_same_ctx(lhs, rhs);
  return numeric_check(OpSum{{lhs}}, OpSum{{rhs}}, lhs.k(), cfg);
}

OracleReport numeric_check(const OpRelation& rel, int k, const OracleConfig& cfg) {
  return numeric_check(rel.adjoint_lhs ? adjoint_words(rel.lhs) : rel.lhs, rel.rhs, k, cfg, rel.project);
}

OracleReport numeric_check(const ScalarRelation& rel, int k, const OracleConfig& cfg) {
  return run_trials(cfg, [&](std::mt19937_64& rng) {
    const double phi = sector_phi(k, rng, cfg.margin);
    return std::pair{cplx(rel.lhs_num(phi)), cplx(rel.rhs_num(phi))};
  });
}

OracleReport numeric_check(const CheckCase& c, const OracleConfig& cfg) {
  OracleReport out;
  if (!c.applicable) return out;
  out.trials = cfg.trials;
  auto merge = [&out](const OracleReport& r) {
    out.failed_trials = std::max(out.failed_trials, r.failed_trials);
    out.max_deviation = std::max(out.max_deviation, r.max_deviation);
    out.pass = out.pass && r.pass;
  };
  for (const auto& rel : c.ops) merge(numeric_check(rel, c.k, cfg));
  for (const auto& rel : c.scalars) merge(numeric_check(rel, c.k, cfg));
  return out;
}

} // namespace dunkl
