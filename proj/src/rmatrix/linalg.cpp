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

#include "rmatrix/linalg.hpp"

#include <utility>

#include "ring/errors.hpp"

namespace qdc {

std::size_t rank(ScalarMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  LaurentScalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentScalar v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto d = v.divide_exact(prev);
        if (!d) throw DomainError("inexact division in fraction-free elimination");
        m[i][j] = std::move(*d);
      }
      m[i][c] = LaurentScalar();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace qdc
