#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dunkl/builders.hpp"
#include "dunkl/exprparse.hpp"
#include "support.hpp"

using namespace dunkl;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t error_column(const std::string& text, const FieldPtr& ctx) {
  try {
    parse_op(text, ctx);
  } catch (const ParseError& e) {
    return e.pos() + 1;
  }
  return 0;
}

} // namespace

TEST_CASE("written-out operators elaborate to the builders") {
  auto c3 = ctx_new(3);
  CHECK(parse_op("dr - r^-1*(a*R + b)*(1 + R^2 + R^4)*I", c3) == build_Dr(c3));
  CHECK(parse_op("I*I", c3) == OpExpr::scalar(c3, 1));
  CHECK(parse_op("R^6", c3) == OpExpr::scalar(c3, 1));
  CHECK(parse_op("dphi + a*(tan(phi)*R^3 + tan(phi + pi/k)*R^5 + tan(phi + 2*pi/k)*R)*I"
                 " - b*(cot(phi) + cot(phi + pi/k)*R^2 + cot(phi + 2*pi/k)*R^4)*I",
                 c3) == build_Dphi(c3));
  auto c2 = ctx_new(2);
  CHECK(parse_op("dphi + a*((tank(phi) + seck(phi))*R^2 + tank(phi) - seck(phi))*R*I + b*(tan(phi)*R^2 - cot(phi))*I",
                 c2) == build_Dphi(c2));
  CHECK(parse_op("-dr^2 - r^-1*dr - r^-2*dphi^2 + w2*r^2 + 4*r^-2*(a*(a - 1)*sec2k(phi) + b*(b - 1)*csc2k(phi))", c2) ==
        build_Hk(c2));
}

TEST_CASE("trig sugar") {
  auto c3 = ctx_new(3);
  const OpExpr t = parse_op("tan(phi + 2*pi/k)", c3);
  CHECK(t == OpExpr::zrat(c3, trig(TrigKind::TanShift, 2, *c3)));
  const ZRat f = trig(TrigKind::TanShift, 2, *c3);
  for (double phi : {0.1, 0.4, 0.9, 1.7, 2.6}) {
    const double want = std::tan(phi + 2 * std::numbers::pi / 3);
    CHECK(std::abs(f.eval(std::polar(1.0, phi)) - want) < 1e-12 * std::max(1.0, std::abs(want)));
  }
  CHECK(parse_op("cot(phi - pi/k)", c3) == OpExpr::zrat(c3, trig(TrigKind::CotShift, -1, *c3)));
  CHECK(parse_op("sec2(phi+pi/k)", c3) == parse_op("sec2( phi + 1*pi / k )", c3));
}

TEST_CASE("canonical text") {
  CHECK(pretty(build_S(ctx_new(4))) == "1 + R^4");
  auto c3 = ctx_new(3);
  CHECK(pretty(parse_op("I*R", c3)) == "R^5*I");
  CHECK(pretty(parse_op("-dr^2 + 3/2*a", c3)) == "3/2*a - dr^2");
  CHECK(pretty(parse_op("0*dr", c3)) == "0");
  CHECK(pretty(commutator(build_Dr(c3), build_Dphi(c3))) + "\n" == read_file(DUNKL_GOLDEN_DIR "/commutator_k3.txt"));
}

TEST_CASE("division and negative powers") {
  auto c3 = ctx_new(3);
  CHECK(parse_op("1/r", c3) == OpExpr::r_power(c3, -1));
  CHECK(parse_op("r^(-2)", c3) == OpExpr::r_power(c3, -2));
  CHECK(parse_op("tan(phi)/tan(phi)", c3) == OpExpr::scalar(c3, 1));
  CHECK(parse_op("z^-1*z", c3) == OpExpr::scalar(c3, 1));
  CHECK(parse_op("6/4", c3) == OpExpr::scalar(c3, Rational(3, 2)));
}

TEST_CASE("errors carry positions") {
  auto c3 = ctx_new(3);
  CHECK(error_column("dr +", c3) == 5);
  CHECK(error_column("dr + + a", c3) == 6);
  CHECK(error_column("dr $ a", c3) == 4);
  CHECK(error_column("(a + b", c3) == 7);
  CHECK(error_column("a b", c3) == 3);
  CHECK(error_column("foo*a", c3) == 1);
  CHECK(error_column("tan(x)", c3) == 5);
  CHECK(error_column("a/dr", c3) == 3);
  CHECK(error_column("dr^-1", c3) == 3);
  CHECK(error_column("1/(1 + R)", c3) == 3);
  CHECK(error_column("1/a", c3) == 3);
  CHECK(error_column("2*S", c3) == 3);
  CHECK(error_column("2*S", ctx_new(4)) == 0);

  try {
    parse_op("dr + + a", c3);
  } catch (const ParseError& e) {
    CHECK(e.annotate("dr + + a").find("\n  dr + + a\n       ^") != std::string::npos);
  }
}

TEST_CASE("round trip on random operators") {
  std::mt19937_64 rng(100);
  for (int t = 0; t < 100; ++t) {
    auto c = ctx_new(1 + t % 6);
    const OpExpr x = testing::random_op(c, rng);
    const std::string text = pretty(x);
    CAPTURE(text);
    CHECK(parse_op(text, c) == x);
    CHECK(pretty(parse_op(text, c)) == text);
  }
}

TEST_CASE("round trip on the named operators") {
  for (int k = 1; k <= 6; ++k) {
    auto c = ctx_new(k);
    for (const std::string& name : operator_names()) {
      if (name == "S" && k % 2) continue;
      const OpExpr x = *named_operator(name, c);
      CHECK(parse_op(pretty(x), c) == x);
      CHECK(parse_op(name, c) == x);
    }
  }
}

TEST_CASE("unevaluated products") {
  auto c = ctx_new(3);
  const OpSum words = elaborate_words(parse("(dr + a)*(dphi - R)^2 - 3*I"), c);
  CHECK(words.size() == 9);
  CHECK(normal_form(words) == parse_op("(dr + a)*(dphi - R)^2 - 3*I", c));
  CHECK(normal_form(elaborate_words(parse("HkExt"), c)) == build_extended_Hk(c));
  CHECK(elaborate_words(parse("HkExt"), c).size() > 1);
}
