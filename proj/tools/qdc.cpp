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

// Command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "qdc/qdc.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct WorkspaceDeleter {
  void operator()(qdc_workspace* ws) const { qdc_workspace_free(ws); }
};
using Workspace = std::unique_ptr<qdc_workspace, WorkspaceDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qdc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_error(qdc_status st, const qdc_workspace* ws) {
  std::string msg = ws ? qdc_workspace_last_error(ws) : qdc_last_error();
  std::cerr << "qdc: " << qdc_status_string(st);
  if (!msg.empty()) std::cerr << ": " << msg;
  std::cerr << "\n";
  // Bad names, expressions or arguments are usage errors; everything else is internal.
  switch (st) {
    case QDC_ERR_PARSE:
    case QDC_ERR_UNKNOWN_NAME:
    case QDC_ERR_INVALID_INPUT:
    case QDC_ERR_DOMAIN:
    case QDC_ERR_NULL_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

Workspace open_workspace(const std::string& q, int& code) {
  qdc_workspace* raw = nullptr;
  qdc_status st = qdc_workspace_new(q.empty() ? nullptr : q.c_str(), &raw);
  if (st != QDC_OK) {
    code = report_error(st, nullptr);
    return nullptr;
  }
  return Workspace(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic kernel and verification harness for the differential calculus on GL_q(1|1)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qdc_version());

  std::string q;
  std::string presentation, expr;
  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  normalize->add_option("--presentation,-p", presentation, "Presentation name")->required();
  normalize->add_option("expr", expr, "Expression")->required();
  normalize->add_option("--q", q, "Bind q to a nonzero rational");

  std::string suite, format = "text";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite,-s", suite, "Suite name (see 'qdc list')")->required();
  verify->add_option("--q", q, "Numeric mode: bind q to a nonzero rational");
  verify->add_option("--format,-f", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  unsigned max_degree = 4;
  auto* confluence = app.add_subcommand("confluence", "Check local confluence of a presentation");
  confluence->add_option("--presentation,-p", presentation, "Presentation name")->required();
  confluence->add_option("--max-degree,-k", max_degree, "Largest word length examined")->check(CLI::Range(3u, 8u));
  confluence->add_option("--q", q, "Bind q to a nonzero rational");

  auto* list = app.add_subcommand("list", "List presentations and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  int code = 0;
  Workspace ws = open_workspace(q, code);
  if (!ws) return code;

  if (*normalize) {
    char* out = nullptr;
    qdc_status st = qdc_normalize(ws.get(), presentation.c_str(), expr.c_str(), &out);
    if (st != QDC_OK) return report_error(st, ws.get());
    OwnedString s(out);
    std::cout << s.get() << "\n";
    return 0;
  }
  if (*verify) {
    const bool json = format == "json";
    if (qdc_workspace_is_numeric(ws.get()))
      std::cerr << "qdc: numeric mode (q = " << q
                << "): verdicts hold at this value of q only; symbolic mode is the authoritative check\n";
    char* out = nullptr;
    int all_pass = 0;
    qdc_status st = qdc_verify(ws.get(), suite.c_str(), json ? QDC_FORMAT_JSON : QDC_FORMAT_TEXT, &out, &all_pass);
    if (st != QDC_OK) return report_error(st, ws.get());
    OwnedString s(out);
    std::cout << s.get();
    if (json) std::cout << "\n";
    return all_pass ? 0 : kExitFail;
  }
  if (*confluence) {
    char* out = nullptr;
    int ok = 0;
    qdc_status st = qdc_confluence(ws.get(), presentation.c_str(), max_degree, &out, &ok);
    if (st != QDC_OK) return report_error(st, ws.get());
    OwnedString s(out);
    std::cout << s.get();
    return ok ? 0 : kExitFail;
  }
  if (*list) {
    char* pres = nullptr;
    char* suites = nullptr;
    qdc_status st = qdc_list_presentations(ws.get(), &pres);
    if (st != QDC_OK) return report_error(st, ws.get());
    OwnedString p(pres);
    st = qdc_list_suites(&suites);
    if (st != QDC_OK) return report_error(st, nullptr);
    OwnedString s(suites);
    std::cout << "presentations:\n" << p.get() << "suites:\n" << s.get();
    return 0;
  }
  return kExitUsage;
}
