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

#include <optional>
#include <vector>

#include "catalog/catalog.hpp"
#include "hopf/tensor.hpp"
#include "kernel/check.hpp"

namespace qdc {

// Coproduct, counit and antipode on Omega_loc. (dgamma)^-1 has none of them.
class HopfData {
 public:
  explicit HopfData(const CatalogEntry& omega_loc);

  const CatalogEntry& entry() const { return *entry_; }
  const Pres& presentation() const { return entry_->presentation(); }

  // Images are normalized.
  TensorElement coproduct(const Elem& e) const;
  LaurentScalar counit(const Elem& e) const;
  Elem antipode(const Elem& e) const;

  const TensorElement& coproduct(GenId g) const;
  const LaurentScalar& counit(GenId g) const;
  const Elem& antipode(GenId g) const;

  // Differential coproduct from the matrix form dT (x). T + (-1)^p(T) T (x). dT.
  TensorElement coproduct_matrix_form(GenId dg) const;

  // (Delta x id) and (id x Delta) on a tensor square.
  Tensor<3> coproduct_left(const TensorElement& t) const;
  Tensor<3> coproduct_right(const TensorElement& t) const;
  // mu o (eps x id), mu' o (id x eps), m o (S x id), m o (id x S).
  Elem counit_left(const TensorElement& t) const;
  Elem counit_right(const TensorElement& t) const;
  Elem antipode_left(const TensorElement& t) const;
  Elem antipode_right(const TensorElement& t) const;

 private:
  TensorElement word_coproduct(const Word& w) const;
  Elem word_antipode(const Word& w) const;
  const CatalogEntry* entry_;
  std::vector<std::optional<TensorElement>> delta_;
  std::vector<std::optional<LaurentScalar>> eps_;
  std::vector<std::optional<Elem>> s_;
};

// Axioms on generators, algebra-map properties on every rule, the explicit
// differential coproduct against its matrix form.
CheckList verify_hopf_axioms(const Catalog& cat);

// [Dhat, g] for the eight generators of Omega plus validation of the
// (dgamma)^-1 rules.
CheckList verify_central_element(const Catalog& cat);

}  // namespace qdc
