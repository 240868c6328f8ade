#include "dunkl/coefficient.hpp"

#include <algorithm>

namespace dunkl {

Coefficient::Coefficient(const ZRat& f) : Coefficient(CoeffKey{}, f) {}

Coefficient::Coefficient(const CoeffKey& key, const ZRat& f) {
  if (!f.is_zero()) terms_.emplace(key, f);
}

Coefficient Coefficient::scalar(const FieldCtx& ctx, const Rational& q) { return Coefficient(ZRat::from_rational(ctx, q)); }

Coefficient Coefficient::r_power(const FieldCtx& ctx, int m) {
  return Coefficient(CoeffKey{m, 0, 0, 0}, ZRat::from_rational(ctx, 1));
}

Coefficient Coefficient::param_a(const FieldCtx& ctx) { return Coefficient(CoeffKey{0, 1, 0, 0}, ZRat::from_rational(ctx, 1)); }
Coefficient Coefficient::param_b(const FieldCtx& ctx) { return Coefficient(CoeffKey{0, 0, 1, 0}, ZRat::from_rational(ctx, 1)); }
Coefficient Coefficient::param_w2(const FieldCtx& ctx) { return Coefficient(CoeffKey{0, 0, 0, 1}, ZRat::from_rational(ctx, 1)); }

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == CoeffKey{} && terms_.begin()->second.is_one();
}

void Coefficient::add_term(const CoeffKey& key, const ZRat& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

Coefficient Coefficient::operator-() const {
  Coefficient r;
  for (const auto& [key, f] : terms_) r.terms_.emplace(key, -f);
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [key, f] : o.terms_) add_term(key, f);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [key, f] : o.terms_) add_term(key, -f);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient r;
  for (const auto& [ka, fa] : a.terms_) {
    for (const auto& [kb, fb] : b.terms_) {
      CoeffKey key{ka.r_exp + kb.r_exp, ka.a_deg + kb.a_deg, ka.b_deg + kb.b_deg, ka.w2_deg + kb.w2_deg};
      if (fa.is_one())
        r.add_term(key, fb);
      else if (fb.is_one())
        r.add_term(key, fa);
      else
        r.add_term(key, fa * fb);
    }
  }
  return r;
}

Coefficient Coefficient::scaled(const Rational& q) const {
  Coefficient r;
  if (q.is_zero()) return r;
  for (const auto& [key, f] : terms_) r.terms_.emplace(key, f.scaled(q));
  return r;
}

Coefficient Coefficient::map_z(const std::function<ZRat(const ZRat&)>& fn) const {
  Coefficient r;
  for (const auto& [key, f] : terms_) r.add_term(key, fn(f));
  return r;
}

Coefficient Coefficient::d_r(int s) const {
  Coefficient r;
  for (const auto& [key, f] : terms_) {
    // falling factorial m (m-1) ... (m-s+1)
    std::int64_t ff = 1;
    for (int t = 0; t < s; ++t) ff *= key.r_exp - t;
    if (ff == 0) continue;
    CoeffKey k2 = key;
    k2.r_exp -= s;
    r.add_term(k2, f.scaled(Rational(ff)));
  }
  return r;
}

int Coefficient::max_a_deg() const {
  int m = 0;
  for (const auto& kv : terms_) m = std::max(m, kv.first.a_deg);
  return m;
}

int Coefficient::max_b_deg() const {
  int m = 0;
  for (const auto& kv : terms_) m = std::max(m, kv.first.b_deg);
  return m;
}

int Coefficient::max_w2_deg() const {
  int m = 0;
  for (const auto& kv : terms_) m = std::max(m, kv.first.w2_deg);
  return m;
}

namespace {

std::string pow_text(const char* sym, int e) {
  if (e == 0) return {};
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

} // namespace

bool needs_grouping(const std::string& text) {
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ' ' && depth == 0) return true;
  }
  return false;
}

std::string Coefficient::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, f] : terms_) {
    std::vector<std::string> parts;
    for (auto p : {pow_text("a", key.a_deg), pow_text("b", key.b_deg), pow_text("w2", key.w2_deg),
                   pow_text("r", key.r_exp)})
      if (!p.empty()) parts.push_back(p);
    std::string monomial;
    for (const auto& p : parts) monomial += (monomial.empty() ? "" : "*") + p;

    std::string fs = f.str();
    bool neg = false;
    if (!needs_grouping(fs) && fs.front() == '-') {
      neg = true;
      fs = fs.substr(1);
    } else if (needs_grouping(fs)) {
      fs = "(" + fs + ")";
    }
    std::string term;
    if (monomial.empty())
      term = fs;
    else if (fs == "1")
      term = monomial;
    else
      term = fs + "*" + monomial;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

} // namespace dunkl
