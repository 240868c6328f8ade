#include "dunkl/opalgebra.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Group action of R^i I^e on a coefficient: c -> rotate^i(reflect^e(c)).
Coefficient act(const Coefficient& c, int i, int e) {
  Coefficient out = c;
  if (e != 0) out = out.map_z([](const ZRat& f) { return reflect(f); });
  if (i != 0) out = out.map_z([i](const ZRat& f) { return rotate(f, i); });
  return out;
}

// Lazily filled table of d_r^s d_phi^t applied to one acted-on coefficient.
class DerivTable {
public:
  explicit DerivTable(Coefficient base) { rows_.push_back({std::move(base)}); }

  const Coefficient& get(int s, int t) {
    while (static_cast<int>(rows_.size()) <= s) rows_.push_back({rows_.back()[0].d_r()});
    auto& row = rows_[static_cast<std::size_t>(s)];
    while (static_cast<int>(row.size()) <= t) row.push_back(row.back().map_z([](const ZRat& f) { return d_phi(f); }));
    return row[static_cast<std::size_t>(t)];
  }

private:
  std::vector<std::vector<Coefficient>> rows_;
};

} // namespace

OpExpr::OpExpr(FieldPtr ctx, const Coefficient& c, const OpKey& key) : ctx_(std::move(ctx)) { add_term(key, c); }

OpExpr OpExpr::scalar(const FieldPtr& ctx, const Rational& q) { return OpExpr(ctx, Coefficient::scalar(*ctx, q)); }

OpExpr OpExpr::d_r(const FieldPtr& ctx) { return OpExpr(ctx, Coefficient::scalar(*ctx, 1), {1, 0, 0, 0}); }
OpExpr OpExpr::d_phi(const FieldPtr& ctx) { return OpExpr(ctx, Coefficient::scalar(*ctx, 1), {0, 1, 0, 0}); }
OpExpr OpExpr::rot(const FieldPtr& ctx, int power) { return OpExpr(ctx, Coefficient::scalar(*ctx, 1), {0, 0, power, 0}); }
OpExpr OpExpr::refl(const FieldPtr& ctx) { return OpExpr(ctx, Coefficient::scalar(*ctx, 1), {0, 0, 0, 1}); }
OpExpr OpExpr::r_power(const FieldPtr& ctx, int m) { return OpExpr(ctx, Coefficient::r_power(*ctx, m)); }
OpExpr OpExpr::param_a(const FieldPtr& ctx) { return OpExpr(ctx, Coefficient::param_a(*ctx)); }
OpExpr OpExpr::param_b(const FieldPtr& ctx) { return OpExpr(ctx, Coefficient::param_b(*ctx)); }
OpExpr OpExpr::param_w2(const FieldPtr& ctx) { return OpExpr(ctx, Coefficient::param_w2(*ctx)); }

std::size_t OpExpr::term_count() const {
  std::size_t n = 0;
  for (const auto& kv : terms_) n += kv.second.size();
  return n;
}

void OpExpr::add_term(OpKey key, const Coefficient& c) {
  if (c.is_zero()) return;
  if (key.p < 0 || key.q < 0) throw std::invalid_argument("negative derivative power");
  key.i = mod(key.i, 2 * ctx_->k());
  key.e = mod(key.e, 2);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void require_same_ctx(const OpExpr& a, const OpExpr& b) {
  if (!a.ctx_ptr() || !b.ctx_ptr()) throw std::invalid_argument("operator without field context");
  if (a.ctx_ptr() != b.ctx_ptr() && a.k() != b.k())
    throw std::invalid_argument("operands live over different dihedral indices (k=" + std::to_string(a.k()) +
                                " vs k=" + std::to_string(b.k()) + ")");
}

OpExpr OpExpr::operator-() const {
  OpExpr r(ctx_);
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
  require_same_ctx(*this, o);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

OpExpr& OpExpr::operator-=(const OpExpr& o) {
  require_same_ctx(*this, o);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

OpExpr OpExpr::scaled(const Rational& q) const {
  OpExpr r(ctx_);
  if (q.is_zero()) return r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, c.scaled(q));
  return r;
}

OpExpr OpExpr::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative operator power");
  OpExpr r = identity(ctx_);
  for (int t = 0; t < n; ++t) r = r * *this;
  return r;
}

// (c1 d_r^p1 d_phi^q1 g1)(c2 d_r^p2 d_phi^q2 g2): move g1 right past c2 and the
// derivatives (I flips d_phi), then expand d_r^p1 d_phi^q1 c2 by Leibniz.
OpExpr operator*(const OpExpr& a, const OpExpr& b) {
  require_same_ctx(a, b);
  const int two_k = 2 * a.k();
  OpExpr r(a.ctx_);
  for (const auto& [kb, cb] : b.terms_) {
    std::map<std::pair<int, int>, DerivTable> tables;
    for (const auto& [ka, ca] : a.terms_) {
      auto it = tables.find({ka.i, ka.e});
      if (it == tables.end()) it = tables.emplace(std::pair{ka.i, ka.e}, DerivTable(act(cb, ka.i, ka.e))).first;
      DerivTable& table = it->second;
      const bool flip = ka.e == 1 && kb.q % 2 == 1;
      const int gi = mod(ka.i + (ka.e ? -kb.i : kb.i), two_k);
      const int ge = (ka.e + kb.e) % 2;
      for (int s = 0; s <= ka.p; ++s) {
        for (int t = 0; t <= ka.q; ++t) {
          const Coefficient& d = table.get(s, t);
          if (d.is_zero()) continue;
          std::int64_t mult = binom(ka.p, s) * binom(ka.q, t);
          if (flip) mult = -mult;
          Coefficient c = ca * d;
          if (mult != 1) c = c.scaled(Rational(mult));
          r.add_term({ka.p - s + kb.p, ka.q - t + kb.q, gi, ge}, c);
        }
      }
    }
  }
  return r;
}

int OpExpr::max_p() const {
  int m = 0;
  for (const auto& kv : terms_) m = std::max(m, kv.first.p);
  return m;
}

int OpExpr::max_q() const {
  int m = 0;
  for (const auto& kv : terms_) m = std::max(m, kv.first.q);
  return m;
}

bool OpExpr::is_differential() const {
  for (const auto& kv : terms_)
    if (kv.first.i != 0 || kv.first.e != 0) return false;
  return true;
}

std::string OpExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string gens;
    auto append = [&gens](const std::string& g) { gens += (gens.empty() ? "" : "*") + g; };
    if (key.p == 1) append("dr");
    if (key.p > 1) append("dr^" + std::to_string(key.p));
    if (key.q == 1) append("dphi");
    if (key.q > 1) append("dphi^" + std::to_string(key.q));
    if (key.i == 1) append("R");
    if (key.i > 1) append("R^" + std::to_string(key.i));
    if (key.e == 1) append("I");

    std::string cs = c.str();
    bool neg = false;
    const bool simple = c.size() == 1 && !needs_grouping(cs);
    if (simple && cs.front() == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (!simple) cs = "(" + cs + ")";
    std::string term;
    if (gens.empty())
      term = cs;
    else if (cs == "1")
      term = gens;
    else
      term = cs + "*" + gens;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

OpExpr normal_form(const OpWord& word) {
  if (word.empty()) throw std::invalid_argument("empty operator product");
  OpExpr r = word.front();
  for (std::size_t t = 1; t < word.size(); ++t) r = r * word[t];
  return r;
}

OpExpr normal_form(const OpSum& sum) {
  if (sum.empty()) throw std::invalid_argument("empty operator sum");
  OpExpr r(sum.front().front().ctx_ptr());
  for (const auto& w : sum) r += normal_form(w);
  return r;
}

OpExpr commutator(const OpExpr& x, const OpExpr& y) { return x * y - y * x; }

OpExpr anticommutator(const OpExpr& x, const OpExpr& y) { return x * y + y * x; }

OpExpr adjoint(const OpExpr& x) {
  const FieldPtr& ctx = x.ctx_ptr();
  const OpExpr dr_adj = -OpExpr::d_r(ctx) - OpExpr::r_power(ctx, -1);
  const OpExpr dphi_adj = -OpExpr::d_phi(ctx);
  OpExpr r(ctx);
  for (const auto& [key, c] : x.terms()) {
    // (c d_r^p d_phi^q R^i I^e)^+ = I^e R^{-i} (d_phi^+)^q (d_r^+)^p c^+
    OpExpr t = OpExpr::identity(ctx);
    if (key.e) t = OpExpr::refl(ctx);
    if (key.i) t = t * OpExpr::rot(ctx, -key.i);
    for (int s = 0; s < key.q; ++s) t = t * dphi_adj;
    for (int s = 0; s < key.p; ++s) t = t * dr_adj;
    t = t * OpExpr::coeff(ctx, c.map_z([](const ZRat& f) { return conj_coeff(f); }));
    r += t;
  }
  return r;
}

OpExpr project_identity(const OpExpr& x) {
  OpExpr r(x.ctx_ptr());
  for (const auto& [key, c] : x.terms()) r.add_term({key.p, key.q, 0, 0}, c);
  return r;
}

OpWord concat(const OpWord& a, const OpWord& b) {
  OpWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

OpSum times(const OpSum& s, const OpWord& w) {
  OpSum r;
  r.reserve(s.size());
  for (const auto& x : s) r.push_back(concat(x, w));
  return r;
}

OpSum times(const OpWord& w, const OpSum& s) {
  OpSum r;
  r.reserve(s.size());
  for (const auto& x : s) r.push_back(concat(w, x));
  return r;
}

} // namespace dunkl
