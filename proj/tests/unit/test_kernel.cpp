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

#include <random>

#include "catalog/catalog.hpp"
#include "kernel/confluence.hpp"
#include "kernel/derivation.hpp"
#include "support/random.hpp"

using namespace qdc;

namespace {

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

std::size_t count_normal_words(const Pres& p, std::size_t degree) {
  std::size_t n = 0;
  Word w(degree, 0);
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == degree) {
      n += p.is_normal(w);
      return;
    }
    for (std::size_t g = 0; g < p.size(); ++g) {
      w[i] = static_cast<GenId>(g);
      self(self, i + 1);
    }
  };
  visit(visit, 0);
  return n;
}

}  // namespace

TEST_CASE("kernel: element arithmetic in the free algebra") {
  Elem x = Elem::word({0, 1}, LaurentScalar(2)), y = Elem::word({1}, LaurentScalar::q());
  Elem xy = x * y;
  CHECK(xy.size() == 1);
  CHECK(xy.coefficient({0, 1, 1}) == LaurentScalar::monomial(2, 1));
  CHECK((x - x).is_zero());
  CHECK((x + y).size() == 2);
  CHECK(xy.max_degree() == 3);
}

TEST_CASE("kernel: a small presentation by hand") {
  Pres p("Qplane", {{"x", 0, std::nullopt}, {"theta", 1, std::nullopt}});
  GenId x = p.id("x"), th = p.id("theta");
  p.add_rule({{th, x}, Elem::word({x, th}, LaurentScalar::q(-1))});
  p.add_rule({{th, th}, Elem()});
  p.validate();
  CHECK(p.format(p.normalize(p.word({"theta", "x", "x"}))) == "q^-2*x*x*theta");
  CHECK(p.normalize(p.word({"theta", "x", "theta"})).is_zero());
  CHECK_THROWS_AS(p.add_rule({{th, x}, Elem()}), InvalidInputError);
  CHECK_THROWS_AS(p.id("y"), UnknownNameError);
  CHECK(check_local_confluence(p, 4).ok());
}

TEST_CASE("kernel: validate rejects a parity-breaking rule") {
  Pres p("Bad", {{"x", 0, std::nullopt}, {"theta", 1, std::nullopt}});
  p.add_rule({{p.id("theta"), p.id("x")}, p.word({"x"})});
  p.add_rule({{p.id("theta"), p.id("theta")}, Elem()});
  CHECK_THROWS_AS(p.validate(), InvalidInputError);
}

TEST_CASE("kernel: cyclic rules hit the step budget") {
  Pres p("Loop", {{"x", 0, std::nullopt}, {"y", 0, std::nullopt}});
  p.add_rule({{p.id("y"), p.id("x")}, p.word({"x", "y"})});
  p.add_rule({{p.id("x"), p.id("y")}, p.word({"y", "x"})});
  p.set_step_budget(1000);
  CHECK_THROWS_AS(p.normalize(p.word({"y", "x"})), StepBudgetExceeded);
}

TEST_CASE("kernel: hand-reduced words of A_glq11") {
  const Pres& p = catalog().presentation("A_glq11");
  LaurentScalar q = LaurentScalar::q(), c = q - q.inverse();
  // d*a*a = a*a*d + c (1 + q^-2) a*beta*gamma
  Elem expect = p.word({"a", "a", "d"}) + p.word({"a", "beta", "gamma"}).scaled(c * (1 + q.pow(-2)));
  CHECK(p.normalize(p.word({"d", "a", "a"})) == expect);
  CHECK(p.normalize(p.word({"gamma", "beta", "gamma"})).is_zero());
  CHECK(p.normalize(p.word({"d", "beta"})) == p.word({"beta", "d"}).scaled(q));
}

TEST_CASE("kernel: A_glq11 normal words match the PBW count") {
  // Basis a^i beta^e gamma^f d^j with e, f in {0, 1}.
  const Pres& p = catalog().presentation("A_glq11");
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t pbw = 0;
    for (std::size_t e = 0; e <= 1; ++e)
      for (std::size_t f = 0; f <= 1; ++f)
        if (e + f <= n) pbw += n - e - f + 1;
    CHECK(count_normal_words(p, n) == pbw);
  }
}

TEST_CASE("kernel property: normalize is idempotent, linear and parity preserving") {
  std::mt19937 rng(17);
  for (const char* name : {"A_glq11", "A_hat", "Omega", "Forms", "SuperAlg"}) {
    const Pres& p = catalog().presentation(name);
    for (int i = 0; i < 60; ++i) {
      int parity = static_cast<int>(rng() % 2);
      Elem x = testing::random_element(rng, p, 4, 4, parity), y = testing::random_element(rng, p, 4, 3);
      LaurentScalar s = testing::random_scalar(rng, 2, 2);
      Elem nx = p.normalize(x);
      CHECK(p.normalize(nx) == nx);
      CHECK(p.normalize(x + y.scaled(s)) == nx + p.normalize(y).scaled(s));
      for (const auto& [w, c] : nx.terms()) {
        CHECK(p.is_normal(w));
        CHECK(p.parity(w) == parity);
      }
    }
  }
}

TEST_CASE("kernel property: normal form of a product is compatible with factors") {
  std::mt19937 rng(19);
  const Pres& p = catalog().presentation("Omega");
  for (int i = 0; i < 60; ++i) {
    Elem x = testing::random_element(rng, p, 3), y = testing::random_element(rng, p, 3);
    CHECK(p.normalize(x * y) == p.normalize(p.normalize(x) * p.normalize(y)));
  }
}

TEST_CASE("kernel property: graded Leibniz rule for the exterior derivative") {
  std::mt19937 rng(23);
  const CatalogEntry& e = catalog().entry("Omega");
  const Pres& p = e.presentation();
  const auto& d = e.derivation("ext");
  for (int i = 0; i < 60; ++i) {
    int pe = static_cast<int>(rng() % 2);
    Elem x = testing::random_element(rng, p, 3, 3, pe), y = testing::random_element(rng, p, 3, 3);
    Elem lhs = apply_derivation(d, p.normalize(x * y), p);
    Elem dx = apply_derivation(d, x, p), dy = apply_derivation(d, y, p);
    Elem rhs = p.normalize(dx * y + (pe ? -(x * dy) : x * dy));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("kernel: every catalog presentation is locally confluent to degree 3 except LieAlg") {
  for (const auto& name : catalog().names()) {
    auto rep = check_local_confluence(catalog().presentation(name), 3);
    if (name == "LieAlg")
      CHECK_FALSE(rep.ok());
    else
      CHECK_MESSAGE(rep.ok(), name);
  }
}

TEST_CASE("kernel: confluence rejects a degree below 3") {
  CHECK_THROWS_AS(check_local_confluence(catalog().presentation("A_glq11"), 2), InvalidInputError);
}

TEST_CASE("kernel: graded commutator") {
  const Pres& p = catalog().presentation("A_glq11");
  // [beta, gamma] for two odd elements is the anticommutator.
  CHECK(graded_commutator(p.gen("beta"), p.gen("gamma"), p).is_zero());
  LaurentScalar q = LaurentScalar::q();
  CHECK(graded_commutator(p.gen("a"), p.gen("beta"), p) == p.word({"a", "beta"}).scaled(1 - q.inverse()));
  CHECK_THROWS_AS(graded_commutator(p.gen("a") + p.gen("beta"), p.gen("a"), p), InvalidInputError);
}
