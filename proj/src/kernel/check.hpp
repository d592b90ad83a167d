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

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kernel/presentation.hpp"

namespace qdc {

// Outcome of one verification: residual is empty iff it passed.
struct Outcome {
  std::optional<std::string> residual;
  bool pass() const { return !residual; }

  static Outcome ok() { return {}; }
  static Outcome failed(std::string r) { return {std::move(r)}; }
};

// A named, deferred verification. Runners may execute checks concurrently.
struct Check {
  std::string id;
  std::string description;
  std::string paper_eq;  // relation family label
  std::function<Outcome()> run;
};

// Pass iff e is zero; otherwise the canonical text of e.
inline Outcome zero_outcome(const Elem& e, const Pres& p) {
  if (e.is_zero()) return Outcome::ok();
  return Outcome::failed(p.format(e));
}

using CheckList = std::vector<Check>;

// Value computed once, on first use, shared by the checks of one suite.
template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> make) : state_(std::make_shared<State>()) { state_->make = std::move(make); }
  const T& get() const {
    std::call_once(state_->once, [this] { state_->value = std::make_unique<T>(state_->make()); });
    return *state_->value;
  }

 private:
  struct State {
    std::once_flag once;
    std::function<T()> make;
    std::unique_ptr<T> value;
  };
  std::shared_ptr<State> state_;
};

}  // namespace qdc
