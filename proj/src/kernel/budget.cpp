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

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "kernel/presentation.hpp"

namespace qdc {

namespace {

std::uint64_t initial_budget() {
  if (const char* env = std::getenv("QDC_STEP_BUDGET")) {
    try {
      unsigned long long v = std::stoull(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 1000000;
}

std::atomic<std::uint64_t>& budget_slot() {
  static std::atomic<std::uint64_t> b{initial_budget()};
  return b;
}

}  // namespace

std::uint64_t default_step_budget() { return budget_slot().load(); }
void set_default_step_budget(std::uint64_t budget) { budget_slot().store(budget ? budget : initial_budget()); }

}  // namespace qdc
