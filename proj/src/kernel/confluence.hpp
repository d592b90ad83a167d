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

#include <cstddef>
#include <string>
#include <vector>

#include "kernel/presentation.hpp"

namespace qdc {

template <class C>
struct ConfluenceFailure {
  Word word;
  std::size_t first_pos = 0;
  std::size_t second_pos = 0;
  Element<C> difference;
};

template <class C>
struct ConfluenceReport {
  std::string presentation;
  std::size_t max_degree = 0;
  std::size_t words_checked = 0;
  std::size_t ambiguities = 0;
  std::vector<ConfluenceFailure<C>> failures;
  bool ok() const { return failures.empty(); }
};

// Every word up to max_degree with two or more redexes: all one-step
// rewrites must reach the same normal form.
template <class C>
ConfluenceReport<C> check_local_confluence(const Presentation<C>& p, std::size_t max_degree) {
  if (max_degree < 3) throw InvalidInputError("max_degree must be at least 3");
  ConfluenceReport<C> rep;
  rep.presentation = p.name();
  rep.max_degree = max_degree;
  const std::size_t n = p.size();
  if (n == 0) return rep;
  struct Redex {
    std::size_t pos, len;
  };
  Word w;
  std::vector<Redex> redexes;
  auto visit = [&](auto&& self, std::size_t depth) -> void {
    if (w.size() >= 2) {
      redexes.clear();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (p.rule_for(w[i])) redexes.push_back({i, 1});
        if (i + 1 < w.size() && p.rule_for(w[i], w[i + 1])) redexes.push_back({i, 2});
      }
      ++rep.words_checked;
      if (redexes.size() >= 2) {
        ++rep.ambiguities;
        std::vector<Redex> rs = redexes;
        Element<C> base = p.normalize(p.rewrite_at(w, rs[0].pos, rs[0].len));
        for (std::size_t k = 1; k < rs.size(); ++k) {
          Element<C> other = p.normalize(p.rewrite_at(w, rs[k].pos, rs[k].len));
          if (other != base) {
            rep.failures.push_back({w, rs[0].pos, rs[k].pos, base - other});
            break;
          }
        }
      }
    }
    if (depth == max_degree) return;
    for (std::size_t g = 0; g < n; ++g) {
      w.push_back(static_cast<GenId>(g));
      // Prefixes that already fail are still extended: longer words can fail independently.
      self(self, depth + 1);
      w.pop_back();
    }
  };
  visit(visit, 0);
  return rep;
}

}  // namespace qdc
