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

#include <algorithm>
#include <array>
#include <random>

#include "calculus/ansatz.hpp"
#include "calculus/calculus.hpp"
#include "support/random.hpp"

using namespace qdc;

namespace {

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

const CatalogEntry& loc() { return catalog().entry("Omega_loc"); }

Elem nf(const std::string& text) { return loc().presentation().normalize(loc().parse(text)); }

Elem d_of(const std::string& text) { return exterior_d(loc(), loc().parse(text)); }

}  // namespace

TEST_CASE("calculus: d on generators and products") {
  CHECK(d_of("a") == nf("Da"));
  CHECK(d_of("Da").is_zero());
  CHECK(d_of("a*beta") == nf("Da*beta + a*Dbeta"));
  CHECK(d_of("beta*a") == nf("Dbeta*a - beta*Da"));
  CHECK(d_of("3*q^2").is_zero());
}

TEST_CASE("calculus: d on the formal inverses is forced by Leibniz") {
  CHECK(d_of("a_inv") == nf("-a_inv*Da*a_inv"));
  CHECK(d_of("d_inv") == nf("-d_inv*Dd*d_inv"));
  CHECK(d_of("a*a_inv").is_zero());
}

TEST_CASE("calculus: Cartan-Maurer equations") {
  CHECK(d_of("w1") == nf("-u*v"));
  CHECK(d_of("u") == nf("q^2*(w1 - w2)*u"));
  CHECK(d_of("v") == nf("-(w1 - w2)*v"));
  CHECK(d_of("w2") == nf("-u*v"));
  // structure equations before using the two-form relations
  CHECK(d_of("w1") == nf("w1^2 - u*v"));
  CHECK(d_of("u") == nf("w1*u - u*w2"));
}

TEST_CASE("calculus: forms reproduce dT") {
  CHECK(nf("w1*a + u*gamma") == nf("Da"));
  CHECK(nf("w1*beta + u*d") == nf("Dbeta"));
  CHECK(nf("w2*d + v*beta") == nf("Dd"));
  CHECK(nf("w2*gamma + v*a") == nf("Dgamma"));
}

TEST_CASE("calculus property: d squares to zero on random words") {
  std::mt19937 rng(29);
  const Pres& p = loc().presentation();
  GenId skip = p.id("Dgamma_inv");
  for (int i = 0; i < 80; ++i) {
    Elem x = testing::random_element(rng, p, 4, 3);
    Elem clean;
    for (const auto& [w, c] : x.terms())
      if (std::find(w.begin(), w.end(), skip) == w.end()) clean.add(w, c);
    CHECK(exterior_d(loc(), exterior_d(loc(), clean)).is_zero());
  }
}

TEST_CASE("ansatz: selected branch") {
  LaurentScalar q = LaurentScalar::q();
  AnsatzSolution s = solve_ansatz(q);
  CHECK(s.branches.size() == 2);
  const Ansatz& z = s.selected_values;
  CHECK(z.A == q * q);
  CHECK(z.B == 1);
  CHECK(z.F11 == q);
  CHECK(z.F12 == q * q - 1);
  CHECK(z.F21 == -q);
  CHECK(z.F22.is_zero());
}

TEST_CASE("ansatz: selected values satisfy the linear and quadratic constraints") {
  // Constraints restated directly in scalar arithmetic.
  LaurentScalar q = LaurentScalar::q();
  const Ansatz z = solve_ansatz(q).selected_values;
  CHECK(z.F11 + q * z.F22 == q);
  CHECK(z.F12 + q * z.F21 == -1);
  CHECK(z.B == 1);
  CHECK((z.F12 * z.F22).is_zero());
  CHECK(((z.F11 - q * z.A) * z.F22).is_zero());
}

TEST_CASE("ansatz: candidate rules on the selected branch hold in Omega") {
  LaurentScalar q = LaurentScalar::q();
  const Ansatz z = solve_ansatz(q).selected_values;
  const Pres& omega = catalog().presentation("Omega");
  const std::array<Elem, 4> lhs = {omega.word({"a", "Da"}), omega.word({"a", "Dbeta"}), omega.word({"beta", "Da"}),
                                   omega.word({"beta", "Dbeta"})};
  for (int i = 0; i < 4; ++i) CHECK(omega.normalize(lhs[i] - ansatz_rule(z, omega, i)).is_zero());
}

TEST_CASE("ansatz: residuals vanish on the selected branch and not on a perturbation") {
  LaurentScalar q = LaurentScalar::q();
  Ansatz z = solve_ansatz(q).selected_values;
  for (const auto& r : ansatz_residuals(z, q)) CHECK_MESSAGE(r.residual.is_zero(), r.name);
  Ansatz bad = z;
  bad.F12 += 1;
  bool any = false;
  for (const auto& r : ansatz_residuals(bad, q)) any = any || !r.residual.is_zero();
  CHECK(any);
}

TEST_CASE("ansatz property: the F22 = 0 family satisfies every residual for any A and F21") {
  // F22 = 0 with F11 = q, F12 = -1 - q F21, B = 1 solves both constraint sets.
  std::mt19937 rng(31);
  LaurentScalar q = LaurentScalar::q();
  for (int i = 0; i < 25; ++i) {
    Ansatz z;
    z.A = testing::random_scalar(rng, 2, 2);
    z.F21 = testing::random_scalar(rng, 2, 2);
    z.F22 = LaurentScalar(0);
    z.F11 = q;
    z.F12 = LaurentScalar(-1) - q * z.F21;
    z.B = 1;
    for (const auto& r : ansatz_residuals(z, q)) CHECK_MESSAGE(r.residual.is_zero(), r.name);
  }
}

TEST_CASE("calculus: localized rules validate") {
  for (const auto& r : verify_localized_rules(loc().presentation())) CHECK(r.verdict.pass());
}
