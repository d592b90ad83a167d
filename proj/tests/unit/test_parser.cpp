/*
  Copyright (c) 2026 The qdc authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include <doctest.h>

#include "cli/expr.hpp"
#include "support/random.hpp"

using namespace qdc;

TEST_CASE("parser: precedence and printing") {
  Expr e = parse_expr("-2*a^3 + (q - q^-1)*beta*gamma - 3/6");
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].negative);
  CHECK(e.terms[0].product.factors.size() == 2);
  CHECK(e.terms[0].product.factors[1].exponent == 3);
  CHECK(e.terms[1].product.factors[0].atom.kind == Atom::Kind::Paren);
  CHECK(e.terms[2].product.factors[0].atom.number == Rational(1, 2));
  CHECK(print_expr(e) == "-2*a^3 + (q - q^-1)*beta*gamma - 1/2");
}

TEST_CASE("parser: whitespace is insignificant") {
  CHECK(parse_expr("a*b+q") == parse_expr("  a *  b +\tq "));
}

TEST_CASE("parser: errors carry positions") {
  auto message = [](const char* text) {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("a ** b").find("column 4") != std::string::npos);
  CHECK(message("(a + b").find("expected ')'") != std::string::npos);
  CHECK(message("1/0").find("zero denominator") != std::string::npos);
  CHECK(message("a^x").find("expected integer exponent") != std::string::npos);
  CHECK(message("a b").find("column 3") != std::string::npos);
  CHECK(message("").find("unexpected end of input") != std::string::npos);
  CHECK(message("a^99999999999").find("out of range") != std::string::npos);
}

TEST_CASE("parser: evaluation with a resolver") {
  Resolver r;
  r.name = [](const std::string& n) -> std::optional<Elem> {
    if (n == "x") return Elem::word({0});
    if (n == "y") return Elem::word({1});
    return std::nullopt;
  };
  r.inverse = [](const std::string&) -> std::optional<Elem> { return std::nullopt; };
  Elem v = evaluate(parse_expr("(x + y)^2 - q^2*x*y"), r);
  CHECK(v.coefficient({0, 1}) == 1 - LaurentScalar::q(2));
  CHECK(v.coefficient({1, 0}) == 1);
  CHECK(v.coefficient({0, 0}) == 1);
  CHECK(evaluate(parse_expr("(q + q^-1)^0"), r) == Elem::one());
  CHECK_THROWS_AS(evaluate(parse_expr("z"), r), UnknownNameError);
  CHECK_THROWS(evaluate(parse_expr("x^-1"), r));
  CHECK_THROWS_AS(evaluate(parse_expr("(1 + q)^-1"), r), DomainError);
}

TEST_CASE("parser property: print then parse returns the same AST (200 random ASTs)") {
  testing::AstGenerator gen(20261015);
  for (int i = 0; i < 200; ++i) {
    Expr e = gen.expr();
    std::string text = print_expr(e);
    Expr back = parse_expr(text);
    CHECK_MESSAGE(back == e, text);
    CHECK(print_expr(back) == text);
  }
}
