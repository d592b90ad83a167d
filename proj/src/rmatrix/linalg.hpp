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
#include <vector>

#include "ring/laurent.hpp"

namespace qdc {

using ScalarMatrix = std::vector<std::vector<LaurentScalar>>;

// Rank over the fraction field of Q[q, q^-1] by fraction-free (Bareiss)
// elimination; every division is exact in the Laurent ring.
std::size_t rank(ScalarMatrix m);

}  // namespace qdc
