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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "qdc/qdc.h"

namespace {

struct Ws {
  qdc_workspace* p = nullptr;
  explicit Ws(const char* q0 = nullptr) { REQUIRE(qdc_workspace_new(q0, &p) == QDC_OK); }
  ~Ws() { qdc_workspace_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  qdc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("capi: version and status strings") {
  CHECK(std::string(qdc_version()) == "1.0.0");
  CHECK(std::string(qdc_status_string(QDC_ERR_PARSE)) == "parse error");
  CHECK(std::string(qdc_status_string(static_cast<qdc_status>(99))) == "unknown status");
}

TEST_CASE("capi: normalize") {
  Ws ws;
  char* out = nullptr;
  REQUIRE(qdc_normalize(ws.p, "A_glq11", "d*a", &out) == QDC_OK);
  CHECK(take(out) == "(q - q^-1)*beta*gamma + a*d");
  CHECK(qdc_normalize(ws.p, "A_glq11", "a ** b", &out) == QDC_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(std::string(qdc_workspace_last_error(ws.p)).find("column 4") != std::string::npos);
  CHECK(qdc_normalize(ws.p, "Nope", "a", &out) == QDC_ERR_UNKNOWN_NAME);
  CHECK(qdc_normalize(ws.p, "A_glq11", "zz", &out) == QDC_ERR_UNKNOWN_NAME);
  CHECK(qdc_normalize(ws.p, "A_glq11", "a^-1", &out) == QDC_ERR_DOMAIN);
  REQUIRE(qdc_normalize(ws.p, "A_glq11", "a", &out) == QDC_OK);
  take(out);
  CHECK(std::string(qdc_workspace_last_error(ws.p)).empty());
}

TEST_CASE("capi: null arguments") {
  Ws ws;
  char* out = nullptr;
  int ok = 0;
  CHECK(qdc_workspace_new(nullptr, nullptr) == QDC_ERR_NULL_ARGUMENT);
  CHECK(qdc_normalize(nullptr, "A_glq11", "a", &out) == QDC_ERR_NULL_ARGUMENT);
  CHECK(qdc_normalize(ws.p, "A_glq11", nullptr, &out) == QDC_ERR_NULL_ARGUMENT);
  CHECK(qdc_verify(ws.p, nullptr, QDC_FORMAT_TEXT, &out, &ok) == QDC_ERR_NULL_ARGUMENT);
  CHECK(qdc_list_suites(nullptr) == QDC_ERR_NULL_ARGUMENT);
  qdc_workspace_free(nullptr);
}

TEST_CASE("capi: workspace q values") {
  qdc_workspace* ws = nullptr;
  CHECK(qdc_workspace_new("0", &ws) == QDC_ERR_DOMAIN);
  CHECK(ws == nullptr);
  CHECK(std::string(qdc_last_error()).find("nonzero") != std::string::npos);
  CHECK(qdc_workspace_new("1/0", &ws) == QDC_ERR_DOMAIN);
  CHECK(qdc_workspace_new("two", &ws) == QDC_ERR_INVALID_INPUT);
  Ws num("-3/5");
  CHECK(qdc_workspace_is_numeric(num.p) == 1);
  Ws sym;
  CHECK(qdc_workspace_is_numeric(sym.p) == 0);
  char* out = nullptr;
  REQUIRE(qdc_normalize(num.p, "A_glq11", "q", &out) == QDC_OK);
  CHECK(take(out) == "-3/5");
}

TEST_CASE("capi: verify and confluence") {
  Ws ws;
  char* out = nullptr;
  int ok = 0;
  REQUIRE(qdc_verify(ws.p, "central", QDC_FORMAT_JSON, &out, &ok) == QDC_OK);
  std::string report = take(out);
  CHECK(ok == 1);
  CHECK(report.find("\"suite\": \"central\"") != std::string::npos);
  CHECK(qdc_verify(ws.p, "bogus", QDC_FORMAT_TEXT, &out, &ok) == QDC_ERR_UNKNOWN_NAME);
  REQUIRE(qdc_confluence(ws.p, "LieAlg", 3, &out, &ok) == QDC_OK);
  report = take(out);
  CHECK(ok == 0);
  CHECK(report.find("14 failing") != std::string::npos);
  REQUIRE(qdc_confluence(ws.p, "A_glq11", 4, &out, &ok) == QDC_OK);
  take(out);
  CHECK(ok == 1);
  CHECK(qdc_confluence(ws.p, "A_glq11", 2, &out, &ok) == QDC_ERR_INVALID_INPUT);
}

TEST_CASE("capi: listings") {
  Ws ws;
  char* out = nullptr;
  REQUIRE(qdc_list_presentations(ws.p, &out) == QDC_OK);
  CHECK(take(out).find("Omega_loc\n") != std::string::npos);
  REQUIRE(qdc_list_suites(&out) == QDC_OK);
  CHECK(take(out).find("superalgebra\n") != std::string::npos);
}
