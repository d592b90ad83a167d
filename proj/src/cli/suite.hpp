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

#include "catalog/catalog.hpp"
#include "kernel/check.hpp"

namespace qdc {

enum class CheckStatus { Pass, Fail, Error };
const char* status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string description;
  std::string paper_eq;
  CheckStatus status = CheckStatus::Error;
  std::optional<std::string> residual;  // empty iff pass
  double duration_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::optional<Rational> q0;  // set in numeric mode
  std::vector<CheckResult> checks;  // sorted by id

  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::Pass) == checks.size(); }
  const CheckResult* find(const std::string& id) const;
  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();
// Checks of a suite; duplicate ids across the parts of "all" are dropped.
CheckList suite_checks(const Catalog& cat, const std::string& suite);

// Runs checks concurrently (threads = 0: hardware concurrency); exceptions
// become error results.
SuiteReport run_checks(const std::string& suite, const CheckList& checks, unsigned threads = 0);
SuiteReport run_suite(const Catalog& cat, const std::string& suite, unsigned threads = 0);

}  // namespace qdc
