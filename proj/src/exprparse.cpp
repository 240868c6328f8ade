#include "dunkl/exprparse.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "dunkl/builders.hpp"

namespace dunkl {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("column " + std::to_string(pos + 1) + ": " + what), pos_(pos) {}

std::string ParseError::annotate(const std::string& source) const {
  return std::string(what()) + "\n  " + source + "\n  " + std::string(std::min(pos_, source.size()), ' ') + "^";
}

namespace {

struct Token {
  enum class Type { Int, Name, Sym, End };
  Type type = Type::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Int, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Name, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()").find(static_cast<char>(ch)) != std::string::npos) {
      out.push_back({Token::Type::Sym, std::string(1, static_cast<char>(ch)), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + static_cast<char>(ch) + "'");
    }
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

const std::map<std::string, TrigKind>& trig_names() {
  static const std::map<std::string, TrigKind> m{
      {"tan", TrigKind::TanShift}, {"cot", TrigKind::CotShift}, {"sec2", TrigKind::Sec2Shift},
      {"csc2", TrigKind::Csc2Shift}, {"seck", TrigKind::SecK},   {"tank", TrigKind::TanK},
      {"cotk", TrigKind::CotK},      {"sec2k", TrigKind::Sec2K}, {"csc2k", TrigKind::Csc2K},
  };
  return m;
}

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  OpAst run() {
    OpAst e = expr();
    if (peek().type != Token::Type::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

private:
  const Token& peek() const { return toks_[at_]; }
  bool is_sym(const char* s) const { return peek().type == Token::Type::Sym && peek().text == s; }
  bool is_name(const char* s) const { return peek().type == Token::Type::Name && peek().text == s; }
  Token take() { return toks_[at_++]; }

  void expect_sym(const char* s) {
    if (!is_sym(s)) throw ParseError(peek().pos, std::string("expected '") + s + "'" + found());
    ++at_;
  }
  void expect_name(const char* s) {
    if (!is_name(s)) throw ParseError(peek().pos, std::string("expected '") + s + "'" + found());
    ++at_;
  }
  int expect_int() {
    if (peek().type != Token::Type::Int) throw ParseError(peek().pos, "expected an integer" + found());
    const Token t = take();
    if (t.text.size() > 9) throw ParseError(t.pos, "integer too large here");
    return std::stoi(t.text);
  }
  std::string found() const {
    return peek().type == Token::Type::End ? " at end of input" : " but found '" + peek().text + "'";
  }

  static OpAst node(OpAst::Kind k, std::size_t pos, std::vector<OpAst> kids = {}) {
    OpAst n;
    n.kind = k;
    n.pos = pos;
    n.kids = std::move(kids);
    return n;
  }

  OpAst expr() {
    OpAst lhs = term();
    while (is_sym("+") || is_sym("-")) {
      const Token op = take();
      OpAst rhs = term();
      lhs = node(op.text == "+" ? OpAst::Kind::Add : OpAst::Kind::Sub, op.pos, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  OpAst term() {
    OpAst lhs = unary();
    while (is_sym("*") || is_sym("/")) {
      const Token op = take();
      OpAst rhs = unary();
      lhs = node(op.text == "*" ? OpAst::Kind::Mul : OpAst::Kind::Div, op.pos, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  OpAst unary() {
    if (is_sym("-")) {
      const Token op = take();
      return node(OpAst::Kind::Neg, op.pos, {unary()});
    }
    return factor();
  }

  OpAst factor() {
    OpAst base = atom();
    if (!is_sym("^")) return base;
    const Token op = take();
    int sign = 1;
    bool paren = false;
    if (is_sym("(")) {
      ++at_;
      paren = true;
    }
    if (is_sym("-") || is_sym("+")) sign = take().text == "-" ? -1 : 1;
    const int e = expect_int();
    if (paren) expect_sym(")");
    OpAst n = node(OpAst::Kind::Pow, op.pos, {std::move(base)});
    n.value = sign * e;
    return n;
  }

  OpAst atom() {
    const Token t = peek();
    if (t.type == Token::Type::Int) {
      ++at_;
      OpAst n = node(OpAst::Kind::Int, t.pos);
      n.text = t.text;
      return n;
    }
    if (is_sym("(")) {
      ++at_;
      OpAst e = expr();
      expect_sym(")");
      e.pos = t.pos; // errors about a group point at its opening parenthesis
      return e;
    }
    if (t.type == Token::Type::Name) {
      ++at_;
      if (trig_names().count(t.text)) return trig_call(t);
      OpAst n = node(OpAst::Kind::Name, t.pos);
      n.text = t.text;
      return n;
    }
    throw ParseError(t.pos, "expected an operand" + found());
  }

  // trig '(' 'phi' [('+'|'-') [int '*'] 'pi' '/' 'k'] ')'
  OpAst trig_call(const Token& fn) {
    expect_sym("(");
    expect_name("phi");
    int shift = 0;
    if (is_sym("+") || is_sym("-")) {
      const int sign = take().text == "-" ? -1 : 1;
      int j = 1;
      if (peek().type == Token::Type::Int) {
        j = expect_int();
        expect_sym("*");
      }
      expect_name("pi");
      expect_sym("/");
      expect_name("k");
      shift = sign * j;
    }
    expect_sym(")");
    OpAst n = node(OpAst::Kind::Trig, fn.pos);
    n.text = fn.text;
    n.value = shift;
    return n;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// Inverse of a pure coefficient c(r, z) with no parameter dependence.
std::optional<OpExpr> invert(const OpExpr& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [key, c] = *x.terms().begin();
  if (key != OpKey{} || c.size() != 1) return std::nullopt;
  const auto& [ck, f] = *c.terms().begin();
  if (ck.a_deg || ck.b_deg || ck.w2_deg) return std::nullopt;
  auto inv = f.inverse();
  if (!inv) return std::nullopt;
  return OpExpr::coeff(x.ctx_ptr(), Coefficient(CoeffKey{-ck.r_exp, 0, 0, 0}, *inv));
}

OpExpr atom_value(const OpAst& n, const FieldPtr& ctx) {
  const FieldCtx& f = *ctx;
  const std::string& s = n.text;
  if (s == "a") return OpExpr::param_a(ctx);
  if (s == "b") return OpExpr::param_b(ctx);
  if (s == "w2") return OpExpr::param_w2(ctx);
  if (s == "r") return OpExpr::r_power(ctx, 1);
  if (s == "z") return OpExpr::zrat(ctx, ZRat::z_power(f, 1));
  if (s == "zeta") return OpExpr::zrat(ctx, ZRat(CycloScalar::root_power(f, 1)));
  if (s == "i") return OpExpr::zrat(ctx, ZRat(CycloScalar::imag_unit(f)));
  if (s == "dr") return OpExpr::d_r(ctx);
  if (s == "dphi") return OpExpr::d_phi(ctx);
  try {
    if (auto named = named_operator(s, ctx)) return *named;
  } catch (const std::invalid_argument& e) {
    throw ParseError(n.pos, e.what());
  }
  throw ParseError(n.pos, "unknown name '" + s + "'");
}

OpExpr trig_value(const OpAst& n, const FieldPtr& ctx) {
  // f(phi + j pi/k) is f(rho^j z).
  return OpExpr::zrat(ctx, rotate(trig(trig_names().at(n.text), *ctx), n.value));
}

OpExpr inverse_or_throw(const OpExpr& x, std::size_t pos) {
  auto inv = invert(x);
  if (!inv) throw ParseError(pos, "only coefficients in r, z and constants can be inverted");
  return *inv;
}

OpExpr power(const OpExpr& base, int e, std::size_t pos) {
  if (e >= 0) return base.pow(e);
  return inverse_or_throw(base, pos).pow(-e);
}

OpSum product(const OpSum& x, const OpSum& y) {
  OpSum out;
  for (const auto& u : x)
    for (const auto& v : y) out.push_back(concat(u, v));
  return out;
}

OpSum negated(OpSum s) {
  for (auto& w : s) w.front() = -w.front();
  return s;
}

} // namespace

OpAst parse(const std::string& text) { return Parser(text).run(); }

OpExpr elaborate(const OpAst& n, const FieldPtr& ctx) {
  switch (n.kind) {
  case OpAst::Kind::Add:
    return elaborate(n.kids[0], ctx) + elaborate(n.kids[1], ctx);
  case OpAst::Kind::Sub:
    return elaborate(n.kids[0], ctx) - elaborate(n.kids[1], ctx);
  case OpAst::Kind::Mul:
    return elaborate(n.kids[0], ctx) * elaborate(n.kids[1], ctx);
  case OpAst::Kind::Div:
    return elaborate(n.kids[0], ctx) * inverse_or_throw(elaborate(n.kids[1], ctx), n.kids[1].pos);
  case OpAst::Kind::Neg:
    return -elaborate(n.kids[0], ctx);
  case OpAst::Kind::Pow:
    return power(elaborate(n.kids[0], ctx), n.value, n.pos);
  case OpAst::Kind::Int:
    return OpExpr::scalar(ctx, Rational::parse(n.text));
  case OpAst::Kind::Name:
    return atom_value(n, ctx);
  case OpAst::Kind::Trig:
    return trig_value(n, ctx);
  }
  throw ParseError(n.pos, "bad syntax tree");
}

OpSum elaborate_words(const OpAst& n, const FieldPtr& ctx) {
  switch (n.kind) {
  case OpAst::Kind::Add: {
    OpSum s = elaborate_words(n.kids[0], ctx);
    for (auto& w : elaborate_words(n.kids[1], ctx)) s.push_back(std::move(w));
    return s;
  }
  case OpAst::Kind::Sub: {
    OpSum s = elaborate_words(n.kids[0], ctx);
    for (auto& w : negated(elaborate_words(n.kids[1], ctx))) s.push_back(std::move(w));
    return s;
  }
  case OpAst::Kind::Mul:
    return product(elaborate_words(n.kids[0], ctx), elaborate_words(n.kids[1], ctx));
  case OpAst::Kind::Div:
    return times(elaborate_words(n.kids[0], ctx), OpWord{inverse_or_throw(elaborate(n.kids[1], ctx), n.kids[1].pos)});
  case OpAst::Kind::Neg:
    return negated(elaborate_words(n.kids[0], ctx));
  case OpAst::Kind::Pow: {
    if (n.value < 0) return {{power(elaborate(n.kids[0], ctx), n.value, n.pos)}};
    const OpSum base = elaborate_words(n.kids[0], ctx);
    OpSum s{{OpExpr::identity(ctx)}};
    for (int t = 0; t < n.value; ++t) s = product(s, base);
    return s;
  }
  case OpAst::Kind::Name:
    if (n.text == "HkExt") return extended_Hk_sum(ctx, HkForm::ViaDphi);
    break;
  default:
    break;
  }
  return {{elaborate(n, ctx)}};
}

OpExpr parse_op(const std::string& text, const FieldPtr& ctx) { return elaborate(parse(text), ctx); }

std::string pretty(const OpExpr& x) { return x.str(); }

} // namespace dunkl
