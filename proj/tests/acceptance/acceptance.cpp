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

// Acceptance run: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs. Exit status 0 iff every criterion run passed.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "calculus/ansatz.hpp"
#include "calculus/calculus.hpp"
#include "cli/suite.hpp"
#include "kernel/confluence.hpp"
#include "support/random.hpp"

#ifndef QDC_CLI_PATH
#define QDC_CLI_PATH "qdc"
#endif

using namespace qdc;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double s) {
  std::string t = std::to_string(s);
  return t.substr(0, t.find('.') + 3) + " s";
}

const Catalog& symbolic() {
  static const Catalog cat;
  return cat;
}

bool has_prefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// Runs the suites, keeps checks whose id starts with one of the prefixes
// (all when empty) and records every failure.
std::size_t run_suites(Verdict& v, const std::vector<std::string>& suites, const std::vector<std::string>& prefixes = {}) {
  std::size_t n = 0;
  for (const auto& s : suites) {
    SuiteReport rep = run_suite(symbolic(), s);
    for (const auto& r : rep.checks) {
      bool keep = prefixes.empty();
      for (const auto& p : prefixes) keep = keep || has_prefix(r.id, p);
      if (!keep) continue;
      ++n;
      v.require(r.status == CheckStatus::Pass, r.id + " " + status_name(r.status));
    }
  }
  v.require(n > 0, "no checks ran");
  return n;
}

Verdict criterion1() {
  Verdict v;
  auto t0 = Clock::now();
  std::string counts;
  for (const auto& [name, degree] : std::vector<std::pair<std::string, std::size_t>>{
           {"A_glq11", 4}, {"A_hat", 4}, {"Omega", 5}}) {
    auto rep = check_local_confluence(symbolic().presentation(name), degree);
    v.require(rep.ok(), name + ": " + std::to_string(rep.failures.size()) + " failing overlaps");
    counts += name + " deg" + std::to_string(degree) + " " + std::to_string(rep.ambiguities) + " overlaps, ";
  }
  double t = seconds_since(t0);
  v.require(t < 10.0, "runtime " + fixed(t));
  if (v.pass) v.detail = counts + "0 failing, " + fixed(t);
  return v;
}

Verdict criterion2() {
  Verdict v;
  LaurentScalar q = LaurentScalar::q();
  AnsatzSolution s = solve_ansatz(q);
  const Ansatz& z = s.selected_values;
  v.require(z.A == q * q && z.B == 1 && z.F11 == q && z.F12 == q * q - 1 && z.F21 == -q && z.F22.is_zero(),
            "selected branch differs from the expected relations");
  v.require(z.F11 + q * z.F22 == q && z.F12 + q * z.F21 == -1, "linear constraints");
  v.require((z.F12 * z.F22).is_zero() && ((z.F11 - q * z.A) * z.F22).is_zero(), "quadratic constraints");
  for (const auto& r : ansatz_residuals(z, q)) v.require(r.residual.is_zero(), "residual " + r.name);
  Ansatz bad = z;
  bad.F11 += 1;
  bool nonzero = false;
  for (const auto& r : ansatz_residuals(bad, q)) nonzero = nonzero || !r.residual.is_zero();
  v.require(nonzero, "perturbed control has zero residuals");
  std::size_t n = run_suites(v, {"ansatz"});
  if (v.pass) v.detail = std::to_string(s.branches.size()) + " branches, " + std::to_string(n) + " checks";
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t n = run_suites(v, {"relations"}, {"d2.", "d."});
  if (v.pass) v.detail = std::to_string(n) + " checks (d^2 on generators and 100 random words, d of every relation)";
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::size_t n = run_suites(v, {"inverse", "forms"});
  if (v.pass) v.detail = std::to_string(n) + " checks";
  return v;
}

Verdict criterion5() {
  Verdict v;
  const CatalogEntry& loc = symbolic().entry("Omega_loc");
  auto d_equals = [&](const char* x, const char* rhs) {
    Elem lhs = exterior_d(loc, loc.parse(x));
    v.require(lhs == loc.presentation().normalize(loc.parse(rhs)), std::string("d") + x + " = " + rhs);
  };
  d_equals("u", "q^2*(w1 - w2)*u");
  d_equals("w2", "-u*v");
  d_equals("w1", "-u*v");
  d_equals("v", "-(w1 - w2)*v");
  std::size_t n = run_suites(v, {"structure"});
  if (v.pass) v.detail = std::to_string(n) + " checks";
  return v;
}

Verdict single_suite(const std::string& suite) {
  Verdict v;
  std::size_t n = run_suites(v, {suite});
  if (v.pass) v.detail = std::to_string(n) + " checks";
  return v;
}

Verdict criterion9() {
  Verdict v;
  auto t0 = Clock::now();
  std::size_t n = run_suites(v, {"rmatrix", "plane"});
  double t = seconds_since(t0);
  v.require(t < 20.0, "runtime " + fixed(t));
  if (v.pass) v.detail = std::to_string(n) + " checks, " + fixed(t);
  return v;
}

Verdict criterion10() {
  Verdict v;
  testing::AstGenerator gen(10);
  int round_trips = 0;
  for (int i = 0; i < 200; ++i) {
    Expr e = gen.expr();
    std::string text = print_expr(e);
    bool ok = false;
    try {
      ok = parse_expr(text) == e && print_expr(parse_expr(text)) == text;
    } catch (const std::exception&) {
    }
    round_trips += ok;
  }
  v.require(round_trips == 200, "parser round-trip " + std::to_string(round_trips) + "/200");

  const std::string cmd = std::string("\"") + QDC_CLI_PATH + "\" verify --suite all > /dev/null 2>&1";
  auto t0 = Clock::now();
  int rc = std::system(cmd.c_str());
  double t = seconds_since(t0);
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  v.require(code == 0, "verify --suite all exit code " + std::to_string(code));
  v.require(t < 60.0, "verify --suite all took " + fixed(t));

  SuiteReport sym = run_suite(symbolic(), "all");
  Catalog two(Rational(2));
  SuiteReport num = run_suite(two, "all");
  std::map<std::string, CheckStatus> by_id;
  for (const auto& r : sym.checks) by_id[r.id] = r.status;
  std::size_t disagree = 0;
  for (const auto& r : num.checks) {
    auto it = by_id.find(r.id);
    if (it == by_id.end() || it->second != r.status) ++disagree;
  }
  if (num.checks.size() != sym.checks.size()) ++disagree;
  v.require(disagree == 0, std::to_string(disagree) + " numeric verdicts differ from symbolic");
  if (v.pass) v.detail = "200/200 round-trips, exit 0 in " + fixed(t) + ", " + std::to_string(sym.checks.size()) +
                         " verdicts agree at q = 2";
  else if (disagree == 0)
    v.detail += "; numeric shadow agrees on all " + std::to_string(sym.checks.size()) + " checks";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"relation engine confluence", criterion1},
      {"ansatz", criterion2},
      {"differential consistency", criterion3},
      {"inverse and forms re-derivation", criterion4},
      {"structure equations", criterion5},
      {"superalgebra", [] { return single_suite("superalgebra"); }},
      {"Hopf structure", [] { return single_suite("hopf"); }},
      {"central element", [] { return single_suite("central"); }},
      {"R-matrix", criterion9},
      {"CLI", criterion10},
  };
  std::size_t only = 0;
  if (argc > 1) {
    try {
      only = std::stoul(argv[1]);
    } catch (const std::exception&) {
      only = 0;
    }
    if (only < 1 || only > criteria.size()) {
      std::cerr << "usage: " << argv[0] << " [1-" << criteria.size() << "]\n";
      return 2;
    }
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("error: ") + e.what();
    }
    all = all && v.pass;
    std::cout << "criterion " << (i + 1) << " " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n" << std::flush;
  }
  return all ? 0 : 1;
}
