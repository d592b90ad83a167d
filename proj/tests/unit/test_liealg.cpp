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

#include <set>

#include "cli/suite.hpp"
#include "kernel/confluence.hpp"
#include "liealg/liealg.hpp"

using namespace qdc;

namespace {

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

bool vanishes_at_one(const Elem& e) {
  for (const auto& [w, c] : e.terms())
    if (c.eval(1) != 0) return false;
  return true;
}

std::set<std::string> failing(const CheckList& checks) {
  std::set<std::string> out;
  for (const auto& r : run_checks("t", checks).checks)
    if (r.status != CheckStatus::Pass) out.insert(r.id);
  return out;
}

}  // namespace

TEST_CASE("liealg: SuperAlg is confluent and its identities hold") {
  CHECK(check_local_confluence(catalog().presentation("SuperAlg"), 4).ok());
  const CatalogEntry& e = catalog().entry("SuperAlg");
  for (const auto* id : e.identities("superalgebra")) CHECK_MESSAGE(e.residual(*id).is_zero(), id->id);
}

TEST_CASE("liealg: the cross relations are not confluent with the matrix relations") {
  // Overlap words at degree 3 whose two reductions disagree, as found by
  // the rewriting engine.
  const std::set<std::string> expected = {
      "T1*beta*a",       "T1*gamma*a",       "T1*gamma*beta",    "T1*d*a",          "T1*d*beta",
      "T1*d*gamma",      "nabla_p*T1*a",     "nabla_p*T1*beta",  "nabla_p*T1*gamma", "nabla_m*T1*beta",
      "nabla_m*T1*gamma", "nabla_m*T1*d",    "nabla_m*nabla_p*beta", "nabla_m*nabla_p*gamma"};
  const Pres& p = catalog().presentation("LieAlg");
  auto rep = check_local_confluence(p, 3);
  std::set<std::string> words;
  for (const auto& f : rep.failures) {
    words.insert(p.format_word(f.word));
    // Every defect is a pure deformation term.
    CHECK_MESSAGE(vanishes_at_one(f.difference), p.format_word(f.word));
  }
  CHECK(words == expected);
  CHECK(rep.ambiguities == 88);
}

TEST_CASE("liealg: the undeformed system is confluent") {
  Catalog one(Rational(1));
  CHECK(check_local_confluence(one.presentation("LieAlg"), 4).ok());
}

TEST_CASE("liealg: failing superalgebra checks") {
  std::set<std::string> expected = {"confluence.LieAlg.deg4",     "cross.nabla_m*T1*beta",
                                    "cross.nabla_m*T1*d",         "cross.nabla_m*T1*gamma",
                                    "cross.nabla_m*nabla_p*beta", "cross.nabla_m*nabla_p*gamma",
                                    "cross.nabla_p*T1*a",         "cross.nabla_p*T1*beta",
                                    "cross.nabla_p*T1*gamma",     "xy.anti"};
  CheckList all = verify_superalgebra(catalog());
  for (auto&& part : {verify_xy_basis(catalog()), verify_cross_relations_consistency(catalog()),
                      verify_classical_limit(catalog())})
    all.insert(all.end(), part.begin(), part.end());
  CHECK(failing(all) == expected);
}

TEST_CASE("liealg: classical limit checks pass") {
  CHECK(failing(verify_classical_limit(catalog())).empty());
}

TEST_CASE("liealg: deformation term of the xy anticommutator is off by a factor of two") {
  const CatalogEntry& e = catalog().entry("SuperAlg");
  const Identity& id = e.identity("xy.anti");
  const Pres& p = e.presentation();
  Elem lhs = p.normalize(e.evaluate(id.lhs)), rhs = p.normalize(e.evaluate(id.rhs));
  Elem undeformed = p.normalize(e.parse("q^2*X"));
  CHECK(lhs != rhs);
  CHECK((rhs - undeformed) == (lhs - undeformed).scaled(LaurentScalar(2)));
}
