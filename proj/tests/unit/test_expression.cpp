#include "orecalc/expression.hpp"

#include "support.hpp"

using namespace orecalc;
using namespace orecalc::testing;

namespace {

std::string tree(std::string_view text) { return to_string(*parse_expression(text)); }

ParseError error_of(std::string_view text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  return ParseError({}, "");
}

}  // namespace

TEST_CASE("grammar and precedence") {
  CHECK(parse_expression("[L01,L12]")->kind == Expr::Kind::Commutator);
  auto sum = parse_expression("3/2*J1*K2 - i*K1");
  REQUIRE(sum->kind == Expr::Kind::Sum);
  CHECK(sum->args.size() == 2);
  CHECK(sum->args[0]->kind == Expr::Kind::Product);
  CHECK(sum->signs == std::vector<int>{1, -1});
  auto adj = parse_expression("adj(skewL(p,l;par))");
  REQUIRE(adj->kind == Expr::Kind::Adjoint);
  CHECK(adj->args[0]->kind == Expr::Kind::SkewLeft);
  CHECK(adj->args[0]->name == "par");
  CHECK(tree("a*b^2") == "(a*b^2)");
  CHECK(tree("(a*b)^2") == "(a*b)^2");
  CHECK(tree("a + b*c") == "(a+(b*c))");
  CHECK(tree("-a") == "(-a)");
  CHECK(tree("par(x)^3") == "par(x)^3");
  CHECK(tree("skewR(a,b;alpha)") == "skewR(a,b;alpha)");
  CHECK(parse_expression("6/4")->value == mpq_class(3, 2));
}

TEST_CASE("errors carry line and column") {
  ParseError e = error_of("[L01,L12");
  CHECK(e.pos().line == 1);
  CHECK(e.pos().column == 9);
  CHECK(std::string(e.what()) ==
        "line 1, column 9: expected ']' but found end of input (to close '[' at line 1, column 1)");
  CHECK(error_of("a $ b").pos().column == 3);
  CHECK(error_of("a +\n  * b").pos().line == 2);
  CHECK(error_of("a +\n  * b").pos().column == 3);
  CHECK(error_of("a^-1").pos().column == 3);
  CHECK(error_of("1/0").pos().column == 1);
  CHECK(error_of("skewL(a,b)").pos().column == 10);
  CHECK(error_of("a b").pos().column == 3);
  CHECK(error_of("").pos().column == 1);
}

TEST_CASE("elaboration resolves symbols against the algebra") {
  const Algebra so = builtin("so13");
  CHECK(to_string(so.evaluate("[L01,L12]")) == "i*L02");
  CHECK(to_string(so.evaluate("J3")) == "L12");
  CHECK(to_string(so.evaluate("par(L01*L12)")) == "-L01*L12");
  CHECK(to_string(so.evaluate("conj(i*L01)")) == "i*L01");
  CHECK_THROWS_AS(so.evaluate("Q1"), ParseError);
  CHECK_THROWS_AS(so.evaluate("nope(L01)"), ParseError);
  try {
    so.evaluate("L01 + \n   Q1");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 4);
  }
  const Algebra w = builtin("weyl1");
  CHECK_THROWS_AS(w.evaluate("i*x"), RingMismatch);
  CHECK(to_string(w.evaluate("x*t")) == "t*x + 1");
  CHECK(to_string(w.evaluate("x^2*t^2")) == "t^2*x^2 + 4*t*x + 2");
}

TEST_CASE("skew commutators and adjoints in expressions") {
  const Algebra ccr = builtin("skewccr");
  CHECK(to_string(ccr.evaluate("skewL(p,l;par) + i*hbar")) == "0");
  CHECK(to_string(ccr.evaluate("skewR(l,p;par)")) == to_string(ccr.evaluate("l*p + p*l")));
  CHECK(to_string(ccr.evaluate("adj(i*p*l)")) == to_string(ccr.evaluate("-i*l*p")));
  CHECK(to_string(ccr.evaluate("adj(skewL(p,l;par))")) == "-i*hbar");
}
