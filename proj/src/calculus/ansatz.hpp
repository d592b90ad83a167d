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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "calculus/param_poly.hpp"
#include "catalog/catalog.hpp"
#include "kernel/check.hpp"

namespace qdc {

// Coefficients of the first order relations between a, beta and Da, Dbeta:
//   a*Da = A Da*a
//   a*Dbeta = F11 Dbeta*a + F12 Da*beta
//   beta*Da = F21 Da*beta + F22 Dbeta*a
//   beta*Dbeta = B Dbeta*beta
struct Ansatz {
  LaurentScalar A, B, F11, F12, F21, F22;

  std::array<LaurentScalar, kParamCount> values() const { return {A, B, F11, F12, F21, F22}; }
  static Ansatz from(const std::array<LaurentScalar, kParamCount>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
  friend bool operator==(const Ansatz& x, const Ansatz& y) { return x.values() == y.values(); }
};

template <class C>
struct NamedResidual {
  std::string name;
  Element<C> residual;
};

// The four consistency residuals: d of both relations of the a, beta
// subalgebra and the overlaps beta*a*Da, beta*a*Dbeta, reduced with the
// candidate rules. All zero iff z is consistent.
std::vector<NamedResidual<LaurentScalar>> ansatz_residuals(const Ansatz& z, const LaurentScalar& q);
std::vector<NamedResidual<ParamPoly>> ansatz_residuals_symbolic(const LaurentScalar& q);

// d applied to the four candidate rules (using the differential relations
// Dbeta*Da = q Da*Dbeta, Da^2 = 0).
std::vector<NamedResidual<ParamPoly>> ansatz_closure_symbolic(const LaurentScalar& q);

using Assignment = std::array<std::optional<ParamPoly>, kParamCount>;

struct AnsatzBranch {
  std::string name;
  Assignment values;               // solved parameters in terms of the free ones
  std::vector<Param> free;         // parameters left undetermined
  std::vector<ParamPoly> closure;  // d-closure constraints on this branch
  Assignment closed;               // values after imposing the d-closure constraints
};

struct AnsatzSolution {
  std::vector<ParamPoly> linear;     // from the d-residuals
  std::vector<ParamPoly> quadratic;  // from the overlap residuals, after the linear solution
  Assignment linear_solution;
  std::vector<AnsatzBranch> branches;
  std::size_t selected = 0;  // branch with F22 = 0
  Ansatz selected_values;    // that branch with A = q^2
};

AnsatzSolution solve_ansatz(const LaurentScalar& q);

// Solves linear constraints one at a time, pivoting on the first parameter
// with an invertible (monomial) coefficient. Nonlinear constraints are skipped.
Assignment solve_linear(const std::vector<ParamPoly>& constraints, Assignment known = {});

std::string format_assignment(const Assignment& a);

// Candidate relation for one of the four patterns, over Omega's generators.
Elem ansatz_rule(const Ansatz& z, const Pres& omega, int index);

// Checks for the ansatz suite.
CheckList ansatz_checks(const Catalog& cat);

}  // namespace qdc
