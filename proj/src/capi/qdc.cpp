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

#include "qdc/qdc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "catalog/catalog.hpp"
#include "cli/suite.hpp"
#include "kernel/confluence.hpp"
#include "ring/errors.hpp"

struct qdc_workspace {
  std::unique_ptr<qdc::Catalog> catalog;
  std::string last_error;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
qdc_status guarded(qdc_workspace* ws, F&& f) {
  std::string msg;
  qdc_status st = QDC_ERR_INTERNAL;
  try {
    f();
    if (ws) ws->last_error.clear();
    g_last_error.clear();
    return QDC_OK;
  } catch (const qdc::ParseError& e) {
    st = QDC_ERR_PARSE;
    msg = e.what();
  } catch (const qdc::UnknownNameError& e) {
    st = QDC_ERR_UNKNOWN_NAME;
    msg = e.what();
  } catch (const qdc::InvalidInputError& e) {
    st = QDC_ERR_INVALID_INPUT;
    msg = e.what();
  } catch (const qdc::DomainError& e) {
    st = QDC_ERR_DOMAIN;
    msg = e.what();
  } catch (const qdc::UnsupportedError& e) {
    st = QDC_ERR_UNSUPPORTED;
    msg = e.what();
  } catch (const qdc::StepBudgetExceeded& e) {
    st = QDC_ERR_STEP_BUDGET;
    msg = e.what();
  } catch (const std::exception& e) {
    msg = e.what();
  } catch (...) {
    msg = "unknown error";
  }
  if (ws) ws->last_error = msg;
  g_last_error = msg;
  return st;
}

qdc::Rational parse_rational(const char* text) {
  std::string s(text);
  try {
    qdc::Rational r(s);
    if (r.get_den() == 0) throw qdc::DomainError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const qdc::DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw qdc::InvalidInputError("'" + s + "' is not a rational number");
  }
}

}  // namespace

extern "C" {

const char* qdc_version(void) { return "1.0.0"; }

const char* qdc_status_string(qdc_status status) {
  switch (status) {
    case QDC_OK:
      return "ok";
    case QDC_ERR_NULL_ARGUMENT:
      return "null argument";
    case QDC_ERR_PARSE:
      return "parse error";
    case QDC_ERR_UNKNOWN_NAME:
      return "unknown name";
    case QDC_ERR_INVALID_INPUT:
      return "invalid input";
    case QDC_ERR_DOMAIN:
      return "domain error";
    case QDC_ERR_UNSUPPORTED:
      return "unsupported";
    case QDC_ERR_STEP_BUDGET:
      return "step budget exceeded";
    case QDC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

qdc_status qdc_workspace_new(const char* q0, qdc_workspace** out) {
  if (!out) return QDC_ERR_NULL_ARGUMENT;
  *out = nullptr;
  auto ws = std::make_unique<qdc_workspace>();
  qdc_status st = guarded(ws.get(), [&] {
    std::optional<qdc::Rational> v;
    if (q0) v = parse_rational(q0);
    ws->catalog = std::make_unique<qdc::Catalog>(v);
  });
  if (st != QDC_OK) return st;
  *out = ws.release();
  return QDC_OK;
}

void qdc_workspace_free(qdc_workspace* ws) { delete ws; }

const char* qdc_workspace_last_error(const qdc_workspace* ws) { return ws ? ws->last_error.c_str() : ""; }

const char* qdc_last_error(void) { return g_last_error.c_str(); }

int qdc_workspace_is_numeric(const qdc_workspace* ws) { return ws && ws->catalog->numeric() ? 1 : 0; }

void qdc_string_free(char* s) { std::free(s); }

qdc_status qdc_normalize(qdc_workspace* ws, const char* presentation, const char* expr, char** out) {
  if (!ws || !presentation || !expr || !out) return QDC_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded(ws, [&] {
    const qdc::CatalogEntry& e = ws->catalog->entry(presentation);
    *out = dup(e.presentation().format(e.presentation().normalize(e.parse(expr))));
  });
}

qdc_status qdc_verify(qdc_workspace* ws, const char* suite, qdc_format format, char** report, int* all_pass) {
  if (!ws || !suite || !report || !all_pass) return QDC_ERR_NULL_ARGUMENT;
  *report = nullptr;
  *all_pass = 0;
  return guarded(ws, [&] {
    qdc::SuiteReport rep = qdc::run_suite(*ws->catalog, suite);
    *report = dup(format == QDC_FORMAT_JSON ? rep.to_json() : rep.to_text());
    *all_pass = rep.all_pass() ? 1 : 0;
  });
}

qdc_status qdc_confluence(qdc_workspace* ws, const char* presentation, unsigned max_degree, char** report, int* ok) {
  if (!ws || !presentation || !report || !ok) return QDC_ERR_NULL_ARGUMENT;
  *report = nullptr;
  *ok = 0;
  return guarded(ws, [&] {
    const qdc::Pres& p = ws->catalog->presentation(presentation);
    auto rep = qdc::check_local_confluence(p, max_degree);
    std::string text = "presentation " + p.name() + ", degree <= " + std::to_string(max_degree) + ": " +
                       std::to_string(rep.words_checked) + " words, " + std::to_string(rep.ambiguities) +
                       " overlaps, " + std::to_string(rep.failures.size()) + " failing\n";
    for (const auto& f : rep.failures)
      text += "  " + p.format_word(f.word) + ": " + p.format(f.difference) + "\n";
    *report = dup(text);
    *ok = rep.ok() ? 1 : 0;
  });
}

qdc_status qdc_list_presentations(qdc_workspace* ws, char** out) {
  if (!ws || !out) return QDC_ERR_NULL_ARGUMENT;
  return guarded(ws, [&] {
    std::string s;
    for (const auto& n : ws->catalog->names()) s += n + "\n";
    *out = dup(s);
  });
}

qdc_status qdc_list_suites(char** out) {
  if (!out) return QDC_ERR_NULL_ARGUMENT;
  return guarded(nullptr, [&] {
    std::string s;
    for (const auto& n : qdc::suite_names()) s += n + "\n";
    *out = dup(s);
  });
}

}  // extern "C"
