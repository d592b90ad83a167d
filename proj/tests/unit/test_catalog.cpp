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

#include "catalog/catalog.hpp"

using namespace qdc;

namespace {

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

std::string error_of(const std::string& text) {
  try {
    Catalog c({{"t.pres", text}}, std::nullopt);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("catalog: presentations and rule counts") {
  std::vector<std::string> expect = {"A_glq11", "A_hat",    "DualPlane", "Forms",     "LieAlg",
                                     "Omega",   "Omega_loc", "Plane",    "PlaneCalc", "SuperAlg"};
  CHECK(catalog().names() == expect);
  CHECK(catalog().presentation("A_glq11").rules().size() == 8);
  CHECK(catalog().presentation("A_glq11").size() == 4);
  CHECK(catalog().presentation("Omega").size() == 8);
  CHECK(catalog().presentation("Omega_loc").size() == 11);
  CHECK_THROWS_AS(catalog().entry("Nope"), UnknownNameError);
}

TEST_CASE("catalog: identity families are complete") {
  CHECK(catalog().coverage_audit().empty());
  CHECK(catalog().entry("A_glq11").identities("glq11").size() == 8);
  CHECK(catalog().entry("A_hat").identities("hat").size() == 8);
  CHECK(catalog().entry("Omega").identities("mixed.ab").size() + catalog().entry("Omega").identities("mixed").size() ==
        16);
}

TEST_CASE("catalog: every identity of the forward presentations reduces to zero") {
  for (const char* name : {"A_glq11", "A_hat", "Omega"})
    for (const auto& id : catalog().entry(name).identities()) CHECK_MESSAGE(catalog().entry(name).residual(id).is_zero(), id.id);
}

TEST_CASE("catalog: documents round-trip through the printer") {
  for (const auto& name : catalog().names()) {
    const std::string& src = catalog().source_text(name);
    CHECK_MESSAGE(print_document(parse_document(src)) == src, name);
    CHECK(print_document(catalog().document(name)) == src);
  }
}

TEST_CASE("catalog: Omega_loc includes Omega and adds the inverses") {
  const Pres& loc = catalog().presentation("Omega_loc");
  for (const char* g : {"a_inv", "d_inv", "Dgamma_inv"}) {
    REQUIRE(loc.find(g));
    CHECK(loc.generator(*loc.find(g)).inverse_of);
  }
  CHECK(loc.inverse(loc.id("a")) == loc.id("a_inv"));
  CHECK(loc.normalize(loc.word({"a", "a_inv"})) == Elem::one());
}

TEST_CASE("catalog: defines expand in terms of generators") {
  const CatalogEntry& e = catalog().entry("Omega_loc");
  for (const char* n : {"iA", "iB", "iC", "iD", "w1", "u", "v", "w2", "Dhat"}) CHECK(e.has_define(n));
  // T * T^-1 = 1 entrywise
  CHECK(e.presentation().normalize(e.parse("a*iA + beta*iC")) == Elem::one());
  CHECK(e.presentation().normalize(e.parse("a*iB + beta*iD")).is_zero());
  CHECK_THROWS_AS(e.define("nothing"), UnknownNameError);
}

TEST_CASE("catalog: numeric mode binds q") {
  Catalog two(Rational(2));
  CHECK(two.numeric());
  const CatalogEntry& e = two.entry("A_glq11");
  CHECK(e.presentation().format(e.presentation().normalize(e.parse("d*a"))) == "3/2*beta*gamma + a*d");
  CHECK_THROWS_AS(Catalog(Rational(0)), DomainError);
}

TEST_CASE("catalog: malformed documents are rejected with their line") {
  CHECK(error_of("presentation P\ngenerator x sideways\n").find("line 2") != std::string::npos);
  CHECK(error_of("presentation P\ngenerator x even\nrule x*y -> x\n").find("unknown") != std::string::npos);
  CHECK(error_of("presentation P\ngenerator x even\nrule x*x*x -> x\n").find("longer than two") != std::string::npos);
  CHECK(error_of("presentation P\ngenerator t odd\n").find("square") != std::string::npos);
  CHECK(error_of("presentation P\ninclude Missing\n") != "no error");
  CHECK(error_of("presentation P\ngenerator x even\nidentity i l : x = (x\n").find("line 3") != std::string::npos);
}

TEST_CASE("catalog: a well-formed custom document compiles") {
  Catalog c({{"p.pres",
              "presentation P\n"
              "generator x even\n"
              "generator t odd\n"
              "order t x\n"
              "rule x*t -> q*t*x\n"
              "rule t*t -> 0\n"
              "identity P.xt P : x*t = q*t*x\n"}},
            std::nullopt);
  const CatalogEntry& e = c.entry("P");
  REQUIRE(e.identities().size() == 1);
  CHECK(e.residual(e.identities()[0]).is_zero());
}
