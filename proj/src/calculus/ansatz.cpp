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

#include "calculus/ansatz.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <type_traits>

#include "kernel/derivation.hpp"
#include "ring/errors.hpp"

namespace qdc {

namespace {

enum : GenId { kDa = 0, kDbeta = 1, kA = 2, kBeta = 3 };

template <class C>
C lift(const LaurentScalar& s) {
  if constexpr (std::is_same_v<C, LaurentScalar>) return s;
  else return C(s);
}

template <class C>
Presentation<C> candidate_presentation(const std::array<C, kParamCount>& z, const LaurentScalar& q) {
  Presentation<C> p("Ansatz", {{"Da", 1, {}}, {"Dbeta", 0, {}}, {"a", 0, {}}, {"beta", 1, {}}});
  using E = Element<C>;
  auto w = [](GenId x, GenId y, const C& c) { return E::word({x, y}, c); };
  p.add_rule({{kBeta, kA}, w(kA, kBeta, lift<C>(q.inverse())), false});
  p.add_rule({{kBeta, kBeta}, E(), false});
  p.add_rule({{kDbeta, kDa}, w(kDa, kDbeta, lift<C>(q)), false});
  p.add_rule({{kDa, kDa}, E(), false});
  p.add_rule({{kA, kDa}, w(kDa, kA, z[0]), false});
  p.add_rule({{kA, kDbeta}, w(kDbeta, kA, z[2]) + w(kDa, kBeta, z[3]), false});
  p.add_rule({{kBeta, kDa}, w(kDa, kBeta, z[4]) + w(kDbeta, kA, z[5]), false});
  p.add_rule({{kBeta, kDbeta}, w(kDbeta, kBeta, z[1]), false});
  return p;
}

template <class C>
std::vector<NamedResidual<C>> residuals(const Presentation<C>& p, const LaurentScalar& q) {
  using E = Element<C>;
  const C qc = lift<C>(q);
  std::vector<NamedResidual<C>> out;
  // d(a*beta - q*beta*a) = Da*beta + a*Dbeta - q*Dbeta*a + q*beta*Da
  E drel = E::word({kDa, kBeta}) + E::word({kA, kDbeta}) - E::word({kDbeta, kA}, qc) + E::word({kBeta, kDa}, qc);
  out.push_back({"d(a*beta - q*beta*a)", p.normalize(drel)});
  E dsq = E::word({kDbeta, kBeta}) - E::word({kBeta, kDbeta});
  out.push_back({"d(beta^2)", p.normalize(dsq)});
  for (GenId g : {kDa, kDbeta}) {
    Word w{kBeta, kA, g};
    E r = p.normalize(p.rewrite_at(w, 0, 2)) - p.normalize(p.rewrite_at(w, 1, 2));
    out.push_back({std::string("(a*beta - q*beta*a)*") + (g == kDa ? "Da" : "Dbeta"), r});
  }
  return out;
}

std::array<ParamPoly, kParamCount> symbols() {
  std::array<ParamPoly, kParamCount> z;
  for (std::size_t i = 0; i < kParamCount; ++i) z[i] = ParamPoly::var(static_cast<Param>(i));
  return z;
}

void push_coefficients(std::vector<ParamPoly>& out, const Element<ParamPoly>& e) {
  for (const auto& [w, c] : e.terms())
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

ParamPoly subst(const ParamPoly& p, const Assignment& a) { return p.substitute(a); }

bool is_unit(const LaurentScalar& s) { return s.is_monomial(); }

}  // namespace

std::vector<NamedResidual<LaurentScalar>> ansatz_residuals(const Ansatz& z, const LaurentScalar& q) {
  return residuals(candidate_presentation<LaurentScalar>(z.values(), q), q);
}

std::vector<NamedResidual<ParamPoly>> ansatz_residuals_symbolic(const LaurentScalar& q) {
  return residuals(candidate_presentation<ParamPoly>(symbols(), q), q);
}

std::vector<NamedResidual<ParamPoly>> ansatz_closure_symbolic(const LaurentScalar& q) {
  auto p = candidate_presentation<ParamPoly>(symbols(), q);
  DerivationSpec<ParamPoly> d;
  d.name = "d";
  d.images = {Element<ParamPoly>(), Element<ParamPoly>(), Element<ParamPoly>::word({kDa}),
              Element<ParamPoly>::word({kDbeta})};
  std::vector<NamedResidual<ParamPoly>> out;
  const char* names[] = {"d(a*Da - ...)", "d(a*Dbeta - ...)", "d(beta*Da - ...)", "d(beta*Dbeta - ...)"};
  const Word patterns[] = {{kA, kDa}, {kA, kDbeta}, {kBeta, kDa}, {kBeta, kDbeta}};
  for (int i = 0; i < 4; ++i) {
    const Word& pat = patterns[i];
    Element<ParamPoly> rel = Element<ParamPoly>::word(pat) - p.rule_for(pat[0], pat[1])->replacement;
    out.push_back({names[i], apply_derivation(d, rel, p)});
  }
  return out;
}

Assignment solve_linear(const std::vector<ParamPoly>& constraints, Assignment known) {
  for (const auto& raw : constraints) {
    ParamPoly c = subst(raw, known);
    if (c.is_zero() || c.degree() > 1) continue;
    std::optional<Param> pivot;
    for (std::size_t i = 0; i < kParamCount && !pivot; ++i) {
      auto p = static_cast<Param>(i);
      if (is_unit(c.linear_coefficient(p))) pivot = p;
    }
    if (!pivot) {
      if (c.is_constant()) throw DomainError("inconsistent constraint " + c.to_string() + " = 0");
      continue;
    }
    LaurentScalar k = c.linear_coefficient(*pivot);
    ParamPoly rest = c - ParamPoly(k) * ParamPoly::var(*pivot);
    ParamPoly value = ParamPoly(-k.inverse()) * rest;
    Assignment single{};
    single[static_cast<int>(*pivot)] = value;
    for (auto& v : known)
      if (v) v = v->substitute(single);
    known[static_cast<int>(*pivot)] = value;
  }
  return known;
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (!a[i]) continue;
    if (!out.empty()) out += ", ";
    out += std::string(param_name(static_cast<Param>(i))) + " = " + a[i]->to_string();
  }
  return out.empty() ? "{}" : out;
}

AnsatzSolution solve_ansatz(const LaurentScalar& q) {
  AnsatzSolution sol;
  auto res = ansatz_residuals_symbolic(q);
  push_coefficients(sol.linear, res[0].residual);
  push_coefficients(sol.linear, res[1].residual);
  sol.linear_solution = solve_linear(sol.linear);
  for (int i = 2; i < 4; ++i)
    for (const auto& [w, c] : res[i].residual.terms()) {
      ParamPoly r = subst(c, sol.linear_solution);
      if (!r.is_zero() && std::find(sol.quadratic.begin(), sol.quadratic.end(), r) == sol.quadratic.end())
        sol.quadratic.push_back(r);
    }

  // Split on a parameter dividing every quadratic constraint.
  std::optional<Param> split;
  for (std::size_t i = 0; i < kParamCount && !split; ++i) {
    auto p = static_cast<Param>(i);
    if (!sol.quadratic.empty() &&
        std::all_of(sol.quadratic.begin(), sol.quadratic.end(), [&](const ParamPoly& c) { return c.divisible_by(p); }))
      split = p;
  }
  if (!split) throw UnsupportedError("quadratic constraints do not share a parameter factor");

  const std::string v = param_name(*split);
  AnsatzBranch zero{v + " = 0", sol.linear_solution, {}, {}, {}};
  {
    Assignment s{};
    s[static_cast<int>(*split)] = ParamPoly();
    for (auto& x : zero.values)
      if (x) x = x->substitute(s);
    zero.values[static_cast<int>(*split)] = ParamPoly();
  }
  AnsatzBranch nonzero{v + " != 0", {}, {}, {}, {}};
  {
    std::vector<ParamPoly> reduced;
    for (const auto& c : sol.quadratic) reduced.push_back(c.divide_by(*split));
    nonzero.values = solve_linear(reduced, sol.linear_solution);
  }
  sol.branches = {zero, nonzero};

  auto closure = ansatz_closure_symbolic(q);
  for (auto& b : sol.branches) {
    for (std::size_t i = 0; i < kParamCount; ++i)
      if (!b.values[i]) b.free.push_back(static_cast<Param>(i));
    for (const auto& r : closure)
      for (const auto& [w, c] : r.residual.terms()) {
        ParamPoly x = subst(c, b.values);
        if (!x.is_zero() && std::find(b.closure.begin(), b.closure.end(), x) == b.closure.end())
          b.closure.push_back(x);
      }
    b.closed = solve_linear(b.closure, b.values);
  }

  sol.selected = 0;
  Assignment chosen = sol.branches[0].closed;
  Assignment a_value{};
  a_value[static_cast<int>(Param::A)] = ParamPoly(q * q);
  std::array<LaurentScalar, kParamCount> vals;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    ParamPoly x = chosen[i] ? chosen[i]->substitute(a_value) : ParamPoly::var(static_cast<Param>(i)).substitute(a_value);
    if (!x.is_constant()) throw UnsupportedError("selected branch leaves " + std::string(param_name(static_cast<Param>(i))) + " free");
    vals[i] = x.constant_term();
  }
  sol.selected_values = Ansatz::from(vals);
  return sol;
}

Elem ansatz_rule(const Ansatz& z, const Pres& omega, int index) {
  const GenId Da = omega.id("Da"), Db = omega.id("Dbeta"), a = omega.id("a"), b = omega.id("beta");
  switch (index) {
    case 0:
      return Elem::word({Da, a}, z.A);
    case 1:
      return Elem::word({Db, a}, z.F11) + Elem::word({Da, b}, z.F12);
    case 2:
      return Elem::word({Da, b}, z.F21) + Elem::word({Db, a}, z.F22);
    case 3:
      return Elem::word({Db, b}, z.B);
  }
  throw InvalidInputError("ansatz rule index out of range");
}

namespace {

// a = c*b for a scalar c.
bool scalar_multiple(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [ea, ca] = *a.terms().begin();
  const auto& [eb, cb] = *b.terms().begin();
  if (ea != eb) return false;
  // Both leading coefficients are used as-is when one divides the other.
  if (auto c = ca.divide_exact(cb)) return a == ParamPoly(*c) * b;
  if (auto c = cb.divide_exact(ca)) return b == ParamPoly(*c) * a;
  return false;
}

bool same_up_to_scalars(const std::vector<ParamPoly>& xs, const std::vector<ParamPoly>& ys) {
  auto covered = [](const std::vector<ParamPoly>& from, const std::vector<ParamPoly>& to) {
    for (const auto& x : from)
      if (std::none_of(to.begin(), to.end(), [&](const ParamPoly& y) { return scalar_multiple(x, y); })) return false;
    return true;
  };
  return covered(xs, ys) && covered(ys, xs);
}

std::string join_polys(const std::vector<ParamPoly>& v) {
  std::string s;
  for (const auto& p : v) s += (s.empty() ? "" : "; ") + p.to_string() + " = 0";
  return s.empty() ? "{}" : s;
}

ParamPoly P(Param p) { return ParamPoly::var(p); }

}  // namespace

CheckList ansatz_checks(const Catalog& cat) {
  const LaurentScalar q = cat.q();
  auto solution = std::make_shared<std::optional<AnsatzSolution>>();
  auto mutex = std::make_shared<std::mutex>();
  auto solved = [q, solution, mutex]() -> const AnsatzSolution& {
    std::lock_guard lock(*mutex);
    if (!*solution) *solution = solve_ansatz(q);
    return **solution;
  };
  CheckList out;
  out.push_back({"ansatz.linear", "d-consistency yields F11 + q*F22 = q, F12 + q*F21 = -1, B = 1", "ansatz.linear",
                 [=] {
                   using enum Param;
                   std::vector<ParamPoly> stated = {P(F11) + ParamPoly(q) * P(F22) - ParamPoly(q),
                                                    P(F12) + ParamPoly(q) * P(F21) + ParamPoly(1), P(B) - ParamPoly(1)};
                   const auto& s = solved();
                   if (solve_linear(stated) == s.linear_solution) return Outcome::ok();
                   return Outcome::failed(join_polys(s.linear));
                 }});
  out.push_back({"ansatz.quadratic", "overlap consistency yields F12*F22 = 0 and (F11 - q*A)*F22 = 0", "ansatz.quadratic",
                 [=] {
                   using enum Param;
                   const auto& s = solved();
                   std::vector<ParamPoly> stated = {P(F12) * P(F22), (P(F11) - ParamPoly(q) * P(A)) * P(F22)};
                   for (auto& x : stated) x = x.substitute(s.linear_solution);
                   if (same_up_to_scalars(stated, s.quadratic)) return Outcome::ok();
                   return Outcome::failed(join_polys(s.quadratic));
                 }});
  out.push_back({"ansatz.branches", "the quadratic constraints admit exactly two branches, split on F22", "ansatz.quadratic",
                 [=] {
                   const auto& s = solved();
                   if (s.branches.size() == 2 && s.branches[0].name == "F22 = 0") return Outcome::ok();
                   std::string r;
                   for (const auto& b : s.branches) r += b.name + ": " + format_assignment(b.values) + "; ";
                   return Outcome::failed(r);
                 }});
  out.push_back({"ansatz.selected", "branch F22 = 0 with A = q^2 gives A=q^2, B=1, F11=q, F12=q^2-1, F21=-q, F22=0",
                 "ansatz.selected", [=] {
                   const auto& s = solved();
                   Ansatz stated{q * q, LaurentScalar(1), q, q * q - LaurentScalar(1), -q, LaurentScalar()};
                   if (s.selected_values == stated) return Outcome::ok();
                   std::string r;
                   for (std::size_t i = 0; i < kParamCount; ++i)
                     r += std::string(i ? ", " : "") + param_name(static_cast<Param>(i)) + " = " +
                          s.selected_values.values()[i].to_string();
                   return Outcome::failed(r);
                 }});
  out.push_back({"ansatz.residuals.selected", "all four consistency residuals vanish on the selected branch", "ansatz",
                 [=] {
                   const auto& s = solved();
                   std::string r;
                   for (const auto& x : ansatz_residuals(s.selected_values, q))
                     if (!x.residual.is_zero()) r += x.name + " ";
                   return r.empty() ? Outcome::ok() : Outcome::failed("nonzero: " + r);
                 }});
  out.push_back({"ansatz.residuals.control", "perturbed control A=B=F11=1, F12=F21=F22=0 leaves a nonzero residual",
                 "ansatz", [=] {
                   Ansatz control{LaurentScalar(1), LaurentScalar(1), LaurentScalar(1), LaurentScalar(), LaurentScalar(),
                                  LaurentScalar()};
                   for (const auto& x : ansatz_residuals(control, q))
                     if (!x.residual.is_zero()) return Outcome::ok();
                   return Outcome::failed("all residuals vanish on the control");
                 }});
  const CatalogEntry* omega = &cat.entry("Omega");
  const char* rule_names[] = {"a_Da", "a_Dbeta", "beta_Da", "beta_Dbeta"};
  const char* lhs[][2] = {{"a", "Da"}, {"a", "Dbeta"}, {"beta", "Da"}, {"beta", "Dbeta"}};
  for (int i = 0; i < 4; ++i) {
    std::string l0 = lhs[i][0], l1 = lhs[i][1];
    out.push_back({std::string("ansatz.rule.") + rule_names[i],
                   "selected branch reproduces the catalog rule " + l0 + "*" + l1, "mixed.ab", [=] {
                     const Pres& p = omega->presentation();
                     const auto* rule = p.rule_for(p.id(l0), p.id(l1));
                     if (!rule) return Outcome::failed("no catalog rule");
                     Elem mine = ansatz_rule(solved().selected_values, p, i);
                     return zero_outcome(mine - rule->replacement, p);
                   }});
  }
  return out;
}

}  // namespace qdc
