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

#include "hopf/hopf.hpp"
#include "support/random.hpp"

using namespace qdc;

namespace {

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

const HopfData& hopf() {
  static const HopfData h(catalog().entry("Omega_loc"));
  return h;
}

const Pres& loc() { return hopf().presentation(); }

TensorElement pure(const std::string& x, const std::string& y) {
  return TensorElement::product({loc().gen(x), loc().gen(y)});
}

Tensor<2> random_tensor(std::mt19937& rng, const Pres& p) {
  std::array<Elem, 2> s = {testing::random_element(rng, p, 2, 2), testing::random_element(rng, p, 2, 2)};
  return TensorElement::product(s);
}

}  // namespace

TEST_CASE("hopf: coproduct of the matrix elements") {
  CHECK(hopf().coproduct(loc().gen("a")) == pure("a", "a") + pure("beta", "gamma"));
  CHECK(hopf().coproduct(loc().gen("beta")) == pure("a", "beta") + pure("beta", "d"));
  CHECK(hopf().coproduct(loc().gen("gamma")) == pure("gamma", "a") + pure("d", "gamma"));
  CHECK(hopf().coproduct(loc().gen("d")) == pure("gamma", "beta") + pure("d", "d"));
}

TEST_CASE("hopf: coproduct of the differentials") {
  TensorElement expect = pure("Da", "a") + pure("Dbeta", "gamma") + pure("a", "Da") - pure("beta", "Dgamma");
  CHECK(hopf().coproduct(loc().gen("Da")) == expect);
  expect = pure("Dbeta", "d") + pure("Da", "beta") + pure("a", "Dbeta") - pure("beta", "Dd");
  CHECK(hopf().coproduct(loc().gen("Dbeta")) == expect);
  for (const char* g : {"Da", "Dbeta", "Dgamma", "Dd"})
    CHECK(hopf().coproduct(loc().gen(g)) == hopf().coproduct_matrix_form(loc().id(g)));
}

TEST_CASE("hopf: counit and antipode on generators") {
  CHECK(hopf().counit(loc().gen("a")) == 1);
  CHECK(hopf().counit(loc().gen("d")) == 1);
  CHECK(hopf().counit(loc().gen("beta")).is_zero());
  CHECK(hopf().counit(loc().gen("Da")).is_zero());
  CHECK(hopf().counit(loc().gen("a_inv")) == 1);
  const CatalogEntry& e = catalog().entry("Omega_loc");
  CHECK(hopf().antipode(loc().gen("a")) == e.reduced_define("iA"));
  CHECK(hopf().antipode(loc().gen("beta")) == e.reduced_define("iB"));
  CHECK(hopf().antipode(loc().gen("a_inv")) == loc().normalize(e.parse("a - beta*d_inv*gamma")));
}

TEST_CASE("hopf: the inverse of dgamma has no coalgebra structure") {
  CHECK_THROWS_AS(hopf().coproduct(loc().gen("Dgamma_inv")), DomainError);
  CHECK_THROWS_AS(hopf().counit(loc().gen("Dgamma_inv")), DomainError);
}

TEST_CASE("hopf property: Koszul product of tensors is associative") {
  std::mt19937 rng(37);
  const Pres& p = catalog().presentation("Omega");
  for (int i = 0; i < 60; ++i) {
    Tensor<2> x = random_tensor(rng, p), y = random_tensor(rng, p), z = random_tensor(rng, p);
    CHECK(koszul_multiply(p, koszul_multiply(p, x, y), z) == koszul_multiply(p, x, koszul_multiply(p, y, z)));
  }
}

TEST_CASE("hopf: Koszul sign when odd factors cross") {
  const Pres& p = catalog().presentation("Omega");
  Tensor<2> x = TensorElement::product({Elem::one(), p.gen("beta")});
  Tensor<2> y = TensorElement::product({p.gen("gamma"), Elem::one()});
  // (1 x beta)(gamma x 1) = -gamma x beta
  CHECK(koszul_multiply(p, x, y) == TensorElement::product({p.gen("gamma"), p.gen("beta")}).scaled(-1));
  CHECK(koszul_multiply(p, y, x) == TensorElement::product({p.gen("gamma"), p.gen("beta")}));
}

TEST_CASE("hopf property: antipode and counit axioms on random elements") {
  std::mt19937 rng(41);
  const Pres& p = loc();
  std::vector<GenId> gens;
  for (const char* g : {"a", "beta", "gamma", "d", "Da", "Dbeta", "Dgamma", "Dd", "a_inv", "d_inv"}) gens.push_back(p.id(g));
  for (int i = 0; i < 30; ++i) {
    Elem x;
    for (int t = 0; t < 2; ++t) {
      Word w(rng() % 4);
      for (auto& g : w) g = gens[rng() % gens.size()];
      x.add(w, testing::random_scalar(rng, 1, 2) + 1);
    }
    x = p.normalize(x);
    TensorElement dx = hopf().coproduct(x);
    Elem eps = Elem(hopf().counit(x));
    CHECK(hopf().antipode_left(dx) == eps);
    CHECK(hopf().antipode_right(dx) == eps);
    CHECK(hopf().counit_left(dx) == x);
    CHECK(hopf().counit_right(dx) == x);
    CHECK(hopf().coproduct_left(dx) == hopf().coproduct_right(dx));
  }
}

TEST_CASE("hopf property: coproduct is multiplicative") {
  std::mt19937 rng(43);
  const Pres& p = loc();
  std::vector<GenId> gens;
  for (const char* g : {"a", "beta", "gamma", "d", "Da", "Dbeta", "Dgamma", "Dd"}) gens.push_back(p.id(g));
  for (int i = 0; i < 30; ++i) {
    Word u(1 + rng() % 3), v(1 + rng() % 3);
    for (auto& g : u) g = gens[rng() % gens.size()];
    for (auto& g : v) g = gens[rng() % gens.size()];
    Elem x = Elem::word(u), y = Elem::word(v);
    TensorElement lhs = hopf().coproduct(p.normalize(x * y));
    TensorElement rhs = normalize(p, koszul_multiply(p, hopf().coproduct(x), hopf().coproduct(y)));
    CHECK(lhs == rhs);
  }
}
