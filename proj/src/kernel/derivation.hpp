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
#include <string>
#include <vector>

#include "kernel/presentation.hpp"

namespace qdc {

// Images of generators under an odd graded derivation.
template <class C>
struct DerivationSpec {
  std::string name;
  std::vector<std::optional<Element<C>>> images;
  int parity = 1;
};

// Graded Leibniz expansion of each word, unreduced.
template <class C>
Element<C> expand_derivation(const DerivationSpec<C>& d, const Element<C>& e, const Presentation<C>& p) {
  Element<C> out;
  for (const auto& [w, c] : e.terms()) {
    int prefix_parity = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= d.images.size() || !d.images[w[i]])
        throw InvalidInputError("derivation " + d.name + " has no image for generator " + p.generator(w[i]).name);
      const Element<C>& img = *d.images[w[i]];
      Word pre(w.begin(), w.begin() + i), post(w.begin() + i + 1, w.end());
      C sign = (d.parity && prefix_parity) ? -c : c;
      for (const auto& [iw, ic] : img.terms()) out.add(concat(concat(pre, iw), post), sign * ic);
      prefix_parity ^= p.parity(w[i]);
    }
  }
  return out;
}

template <class C>
Element<C> apply_derivation(const DerivationSpec<C>& d, const Element<C>& e, const Presentation<C>& p) {
  return p.normalize(expand_derivation(d, e, p));
}

}  // namespace qdc
