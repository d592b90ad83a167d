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
#include "kernel/confluence.hpp"

namespace qdc {

// Consistency identities in LieAlg plus local confluence of LieAlg.
CheckList verify_superalgebra(const Catalog& cat, std::size_t max_degree = 4);

// X = T1 + T2, Y = T1 - T2 relations reduced with the superalgebra rules only.
CheckList verify_xy_basis(const Catalog& cat);

// L*L'*g reduced as (L*L')*g and as L*(L'*g), for all superalgebra letters
// L, L' and group parameters g.
CheckList verify_cross_relations_consistency(const Catalog& cat);

// At q = 1 every superalgebra relation becomes the undeformed gl(1|1) one.
CheckList verify_classical_limit(const Catalog& cat);

// Local confluence as a check; failures list the first witnesses.
Check confluence_check(const CatalogEntry& entry, std::size_t max_degree, const std::string& label);

}  // namespace qdc
