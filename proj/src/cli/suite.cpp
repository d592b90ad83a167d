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

#include "cli/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include <json.hpp>

#include "calculus/ansatz.hpp"
#include "calculus/calculus.hpp"
#include "hopf/hopf.hpp"
#include "liealg/liealg.hpp"
#include "rmatrix/rmatrix.hpp"

namespace qdc {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Error:
      return "error";
  }
  return "error";
}

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& r) { return r.status == s; }));
}

const CheckResult* SuiteReport::find(const std::string& id) const {
  for (const auto& r : checks)
    if (r.id == id) return &r;
  return nullptr;
}

std::string SuiteReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : checks) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["description"] = r.description;
    c["paper_eq"] = r.paper_eq;
    c["status"] = status_name(r.status);
    c["residual"] = r.residual ? nlohmann::ordered_json(*r.residual) : nlohmann::ordered_json(nullptr);
    c["duration_ms"] = r.duration_ms;
    j["checks"].push_back(std::move(c));
  }
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"error", count(CheckStatus::Error)}};
  return j.dump(indent);
}

std::string SuiteReport::to_text() const {
  std::string out = "suite " + suite;
  if (q0) out += " (numeric, q = " + rational_to_string(*q0) + ")";
  out += "\n";
  for (const auto& r : checks) {
    std::string st = status_name(r.status);
    for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out += st + "  " + r.id + "  [" + r.paper_eq + "]";
    if (r.residual) out += "\n      residual: " + *r.residual;
    out += "\n";
  }
  out += "summary: " + std::to_string(count(CheckStatus::Pass)) + " pass, " +
         std::to_string(count(CheckStatus::Fail)) + " fail, " + std::to_string(count(CheckStatus::Error)) +
         " error\n";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "ansatz",       "inverse", "forms",
                                                 "structure", "superalgebra", "hopf",    "central",
                                                 "rmatrix",   "plane",        "confluence", "all"};
  return names;
}

namespace {

void append(CheckList& out, CheckList more) {
  for (auto& c : more) out.push_back(std::move(c));
}

CheckList base_suite(const Catalog& cat, const std::string& suite) {
  CheckList out;
  if (suite == "relations") {
    append(out, identity_checks(cat.entry("A_glq11"), "glq11"));
    append(out, identity_checks(cat.entry("A_hat"), "hat"));
    append(out, identity_checks(cat.entry("Omega"), "mixed.ab"));
    append(out, identity_checks(cat.entry("Omega"), "mixed"));
    append(out, differential_checks(cat));
  } else if (suite == "ansatz") {
    append(out, ansatz_checks(cat));
  } else if (suite == "inverse") {
    for (const char* f : {"T_inverse", "inverse_differential", "unit"}) append(out, verify_family(cat, f));
    append(out, inverse_differential_checks(cat));
    append(out, localized_rule_checks(cat));
  } else if (suite == "forms") {
    for (const char* f : {"T_forms", "forms", "forms_to_dT"}) append(out, verify_family(cat, f));
    append(out, forms_rule_checks(cat));
  } else if (suite == "structure") {
    append(out, structure_checks(cat));
  } else if (suite == "superalgebra") {
    append(out, verify_superalgebra(cat));
    append(out, verify_xy_basis(cat));
    append(out, verify_cross_relations_consistency(cat));
    append(out, verify_classical_limit(cat));
  } else if (suite == "hopf") {
    append(out, verify_hopf_axioms(cat));
  } else if (suite == "central") {
    append(out, verify_central_element(cat));
  } else if (suite == "rmatrix") {
    for (const auto& f : rtt_family_names()) append(out, verify_rtt_family(cat, f));
    append(out, check_hecke_braid(cat));
  } else if (suite == "plane") {
    append(out, verify_plane_covariance(cat));
  } else if (suite == "confluence") {
    for (const auto& name : cat.names()) {
      std::size_t degree = name == "Omega" ? 5 : 4;
      out.push_back(confluence_check(cat.entry(name), degree, "confluence"));
    }
  } else {
    throw UnknownNameError("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace

CheckList suite_checks(const Catalog& cat, const std::string& suite) {
  if (suite != "all") return base_suite(cat, suite);
  CheckList out;
  std::set<std::string> seen;
  for (const auto& s : suite_names()) {
    if (s == "all") continue;
    for (auto& c : base_suite(cat, s))
      if (seen.insert(c.id).second) out.push_back(std::move(c));
  }
  return out;
}

SuiteReport run_checks(const std::string& suite, const CheckList& checks, unsigned threads) {
  SuiteReport rep;
  rep.suite = suite;
  rep.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
      const Check& c = checks[i];
      CheckResult& r = rep.checks[i];
      r.id = c.id;
      r.description = c.description;
      r.paper_eq = c.paper_eq;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = c.run();
        r.status = o.pass() ? CheckStatus::Pass : CheckStatus::Fail;
        r.residual = o.residual;
      } catch (const std::exception& e) {
        r.status = CheckStatus::Error;
        r.residual = std::string(e.what());
      }
      r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, checks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

SuiteReport run_suite(const Catalog& cat, const std::string& suite, unsigned threads) {
  SuiteReport rep = run_checks(suite, suite_checks(cat, suite), threads);
  rep.q0 = cat.q_value();
  return rep;
}

}  // namespace qdc
