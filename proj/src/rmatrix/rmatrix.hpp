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

#include <string>
#include <vector>

#include "catalog/catalog.hpp"
#include "kernel/check.hpp"
#include "rmatrix/linalg.hpp"
#include "rmatrix/supermatrix.hpp"

namespace qdc {

// Rows (q,0,0,0), (0,q-q^-1,1,0), (0,1,0,0), (0,0,0,-q^-1); basis 11, 12, 21, 22.
SuperMatrix r_hat(const LaurentScalar& q);
// R^-1 = R - (q - q^-1) I.
SuperMatrix r_hat_inverse(const LaurentScalar& q);

// Matrix R-T families, named after the relation family each one reproduces:
// glq11, mixed, hat, forms.T, forms.
const std::vector<std::string>& rtt_family_names();

// The 4x4 matrix whose vanishing is the family's R-matrix equation, with T,
// dT and W given as 2x2 matrices over some presentation.
struct RttInputs {
  SuperMatrix t, t_hat, w;
  LaurentScalar q;
};
SuperMatrix rtt_matrix(const std::string& family, const RttInputs& in);

// 16 forward entry checks plus the degree-2 span comparison.
CheckList verify_rtt_family(const Catalog& cat, const std::string& family);

// TX, T Xhat, dT X, dT Xhat, the quadratic form of the plane relations and
// the mixed coordinate-differential relations.
CheckList verify_plane_covariance(const Catalog& cat);

// Hecke relation, braid relation under both tensor conventions, R R^-1 = I,
// spectrum at q = 2 and Koszul consistency of the graded tensor.
CheckList check_hecke_braid(const Catalog& cat);

// Degree-2 coefficient vectors over a shared word basis.
ScalarMatrix degree_two_vectors(const std::vector<Elem>& elems, std::vector<Word>& basis);

// Presentation of two algebras whose generators graded-commute; a's generators
// come first in the order.
Pres graded_union(const Pres& a, const Pres& b, const std::string& name);

}  // namespace qdc
