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

#include <doctest.h>

#include <json.hpp>
#include <set>

#include "cli/suite.hpp"

using namespace qdc;

namespace {

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

}  // namespace

TEST_CASE("suite: names") {
  CHECK(suite_names().size() == 12);
  CHECK(suite_names().back() == "all");
  CHECK_THROWS_AS(suite_checks(catalog(), "bogus"), UnknownNameError);
}

TEST_CASE("suite: check ids are unique within every suite") {
  for (const auto& s : suite_names()) {
    std::set<std::string> ids;
    for (const auto& c : suite_checks(catalog(), s)) CHECK_MESSAGE(ids.insert(c.id).second, c.id);
  }
}

TEST_CASE("suite: JSON report schema") {
  SuiteReport rep = run_suite(catalog(), "hopf");
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["suite"] == "hopf");
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() == rep.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c["id"].is_string());
    CHECK(c["description"].is_string());
    CHECK(c["paper_eq"].is_string());
    CHECK(c["duration_ms"].is_number());
    std::string st = c["status"];
    CHECK((st == "pass" || st == "fail" || st == "error"));
    CHECK((st == "pass") == c["residual"].is_null());
  }
  CHECK(j["summary"]["pass"] == rep.count(CheckStatus::Pass));
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["error"] == 0);
}

TEST_CASE("suite: exceptions become error results") {
  CheckList checks = {{"x.ok", "passes", "x", [] { return Outcome::ok(); }},
                      {"x.boom", "throws", "x", []() -> Outcome { throw DomainError("boom"); }},
                      {"x.bad", "fails", "x", [] { return Outcome::failed("1"); }}};
  SuiteReport rep = run_checks("x", checks, 2);
  CHECK(rep.find("x.boom")->status == CheckStatus::Error);
  CHECK(*rep.find("x.boom")->residual == "boom");
  CHECK(rep.find("x.bad")->status == CheckStatus::Fail);
  CHECK(rep.find("x.ok")->status == CheckStatus::Pass);
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.checks.front().id == "x.bad");  // sorted by id
  CHECK(rep.to_text().find("summary: 1 pass, 1 fail, 1 error") != std::string::npos);
}

TEST_CASE("suite: verdicts do not depend on the thread count") {
  SuiteReport one = run_suite(catalog(), "rmatrix", 1), many = run_suite(catalog(), "rmatrix", 8);
  REQUIRE(one.checks.size() == many.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    CHECK(one.checks[i].id == many.checks[i].id);
    CHECK(one.checks[i].status == many.checks[i].status);
  }
}

TEST_CASE("suite: numeric mode is labelled") {
  Catalog two(Rational(2));
  SuiteReport rep = run_suite(two, "central");
  CHECK(rep.q0 == Rational(2));
  CHECK(rep.to_text().find("numeric, q = 2") != std::string::npos);
  CHECK(rep.all_pass());
}
