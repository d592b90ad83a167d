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

#include "calculus/calculus.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "kernel/derivation.hpp"
#include "ring/errors.hpp"

namespace qdc {

Elem exterior_d(const CatalogEntry& omega_loc, const Elem& e) {
  return apply_derivation(omega_loc.derivation("ext"), e, omega_loc.presentation());
}

Check identity_check(const CatalogEntry& entry, const Identity& id) {
  const CatalogEntry* e = &entry;
  const Identity* i = &id;
  return {id.id, print_expr(id.lhs) + " = " + print_expr(id.rhs), id.label,
          [e, i] { return zero_outcome(e->residual(*i), e->presentation()); }};
}

CheckList identity_checks(const CatalogEntry& entry, const std::string& label) {
  CheckList out;
  for (const Identity* id : entry.identities(label)) out.push_back(identity_check(entry, *id));
  return out;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"T_inverse", "inverse_differential", "T_forms", "forms",
                                                 "forms_to_dT", "dT_relations", "unit"};
  return names;
}

CheckList verify_family(const Catalog& cat, const std::string& family) {
  static const std::map<std::string, std::pair<std::string, std::vector<std::string>>> table = {
      {"T_inverse", {"Omega_loc", {"inverse.T"}}},
      {"inverse_differential", {"Omega_loc", {"inverse.dT"}}},
      {"T_forms", {"Omega_loc", {"forms.T"}}},
      {"forms", {"Omega_loc", {"forms"}}},
      {"forms_to_dT", {"Omega_loc", {"forms.dT"}}},
      {"dT_relations", {"Omega", {"mixed.ab", "mixed"}}},
      {"unit", {"Omega_loc", {"unit"}}},
  };
  auto it = table.find(family);
  if (it == table.end()) throw UnknownNameError("unknown relation family '" + family + "'");
  const CatalogEntry& entry = cat.entry(it->second.first);
  CheckList out;
  for (const auto& label : it->second.second) {
    auto part = identity_checks(entry, label);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

CheckList forms_rule_checks(const Catalog& cat) {
  const CatalogEntry* forms = &cat.entry("Forms");
  const CatalogEntry* loc = &cat.entry("Omega_loc");
  CheckList out;
  for (const auto& rule : forms->presentation().rules()) {
    const RewriteRule<LaurentScalar>* r = &rule;
    std::string pat = forms->presentation().format_word(rule.pattern);
    out.push_back({"forms.rule." + pat, "Forms rule " + pat + " holds for the composites in Omega_loc", "forms",
                   [forms, loc, r] {
                     std::vector<Elem> images;
                     for (const auto& g : forms->presentation().generators()) images.push_back(loc->define(g.name));
                     Elem diff = substitute(Elem::word(r->pattern) - r->replacement, images);
                     return zero_outcome(loc->presentation().normalize(diff), loc->presentation());
                   }});
  }
  return out;
}

CheckList differential_checks(const Catalog& cat, std::size_t random_words, unsigned seed) {
  const CatalogEntry* loc = &cat.entry("Omega_loc");
  const CatalogEntry* omega = &cat.entry("Omega");
  const Pres& lp = loc->presentation();
  CheckList out;
  for (const auto& g : lp.generators()) {
    std::string name = g.name;
    out.push_back({"d2.gen." + name, "d(d(" + name + ")) = 0", "d2", [loc, name] {
                     Elem e = loc->presentation().gen(name);
                     return zero_outcome(exterior_d(*loc, exterior_d(*loc, e)), loc->presentation());
                   }});
  }
  out.push_back({"d2.random", "d(d(w)) = 0 on " + std::to_string(random_words) + " random words of degree <= 5", "d2",
                 [loc, random_words, seed] {
                   const Pres& p = loc->presentation();
                   std::mt19937 rng(seed);
                   std::uniform_int_distribution<int> len(1, 5);
                   std::uniform_int_distribution<int> letter(0, static_cast<int>(p.size()) - 1);
                   for (std::size_t k = 0; k < random_words; ++k) {
                     Word w;
                     for (int i = len(rng); i > 0; --i) w.push_back(static_cast<GenId>(letter(rng)));
                     Elem r = exterior_d(*loc, exterior_d(*loc, Elem::word(w)));
                     if (!r.is_zero()) return Outcome::failed(p.format_word(w) + ": " + p.format(r));
                   }
                   return Outcome::ok();
                 }});
  // d of every body relation and every mixed relation, reduced in Omega.
  for (const char* label : {"glq11", "mixed.ab", "mixed"}) {
    for (const Identity* id : omega->identities(label)) {
      out.push_back({"d.rel." + id->id, "d(" + print_expr(id->lhs) + " - (" + print_expr(id->rhs) + ")) = 0", "d.rel",
                     [omega, id] {
                       const Pres& p = omega->presentation();
                       Elem rel = omega->evaluate(id->lhs) - omega->evaluate(id->rhs);
                       return zero_outcome(apply_derivation(omega->derivation("ext"), rel, p), p);
                     }});
    }
  }
  return out;
}

CheckList inverse_differential_checks(const Catalog& cat) {
  const CatalogEntry* loc = &cat.entry("Omega_loc");
  CheckList out;
  for (const auto& g : loc->presentation().generators()) {
    if (!g.inverse_of) continue;
    std::string inv = g.name, base = loc->presentation().generator(*g.inverse_of).name;
    for (int side = 0; side < 2; ++side) {
      std::string w = side ? inv + "*" + base : base + "*" + inv;
      out.push_back({"d.unit." + w, "d(" + w + ") = 0", "d.inverse", [loc, w] {
                       return zero_outcome(exterior_d(*loc, loc->parse(w)), loc->presentation());
                     }});
    }
  }
  return out;
}

CheckList structure_checks(const Catalog& cat) {
  const CatalogEntry* loc = &cat.entry("Omega_loc");
  const CatalogEntry* forms = &cat.entry("Forms");
  struct Row {
    const char* name;
    const char* first;   // entry of dW in the two-form basis
    const char* second;  // after the two-form relations
  };
  static const Row rows[] = {
      {"w1", "w1*w1 - u*v", "-u*v"},
      {"u", "w1*u - u*w2", "q^2*(w1 - w2)*u"},
      {"v", "w2*v - v*w1", "-(w1 - w2)*v"},
      {"w2", "w2*w2 - v*u", "-u*v"},
  };
  CheckList out;
  for (const Row& r : rows) {
    std::string n = r.name, first = r.first, second = r.second;
    out.push_back({"structure.d." + n, "d" + n + " = " + first + " with composites expanded", "structure.d",
                   [loc, n, first] {
                     Elem diff = exterior_d(*loc, loc->define(n)) - loc->presentation().normalize(loc->parse(first));
                     return zero_outcome(loc->presentation().normalize(diff), loc->presentation());
                   }});
    out.push_back({"structure.cm." + n, "d" + n + " = " + second + " with composites expanded", "structure.cm",
                   [loc, n, second] {
                     Elem diff = exterior_d(*loc, loc->define(n)) - loc->presentation().normalize(loc->parse(second));
                     return zero_outcome(loc->presentation().normalize(diff), loc->presentation());
                   }});
    out.push_back({"structure.reduced." + n, first + " = " + second + " modulo the two-form relations",
                   "structure.cm", [forms, first, second] {
                     const Pres& p = forms->presentation();
                     return zero_outcome(p.normalize(forms->parse(first) - forms->parse(second)), p);
                   }});
  }
  // dW = s3 W s3 W entrywise, s3 = diag(1, -1).
  static const char* W[2][2] = {{"w1", "u"}, {"v", "w2"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Row& r = rows[i == 0 ? (j == 0 ? 0 : 1) : (j == 0 ? 2 : 3)];
      std::string first = r.first;
      std::string id = "structure.matrix." + std::to_string(i + 1) + std::to_string(j + 1);
      out.push_back({id, std::string("(s3*W*s3*W)_") + std::to_string(i + 1) + std::to_string(j + 1) + " = " + first,
                     "structure.matrix", [forms, i, j, first] {
                       const Pres& p = forms->presentation();
                       Elem acc;
                       for (int k = 0; k < 2; ++k) {
                         // (s3 W s3)_{ik} = s_i s_k W_ik
                         LaurentScalar sign((i == k) ? 1 : -1);
                         acc += (forms->parse(W[i][k]) * forms->parse(W[k][j])).scaled(sign);
                       }
                       return zero_outcome(p.normalize(acc - forms->parse(first)), p);
                     }});
    }
  return out;
}

namespace {

bool inverse_free(const Elem& e, const Pres& p) {
  for (const auto& [w, c] : e.terms())
    for (GenId g : w)
      if (p.generator(g).inverse_of) return false;
  return true;
}

bool is_cancellation(const RewriteRule<LaurentScalar>& r, const Pres& p) {
  return r.pattern.size() == 2 && p.inverse(r.pattern[0]) && *p.inverse(r.pattern[0]) == r.pattern[1];
}

std::string power_text(const Pres& p, const std::vector<std::pair<GenId, int>>& factors) {
  std::string s;
  for (const auto& [g, n] : factors) {
    if (!n) continue;
    if (!s.empty()) s += "*";
    s += p.generator(g).name + (n > 1 ? "^" + std::to_string(n) : "");
  }
  return s.empty() ? "1" : s;
}

}  // namespace

LocalizedVerdict verify_localized_rule(const Pres& loc, const RewriteRule<LaurentScalar>& rule,
                                       const std::vector<const RewriteRule<LaurentScalar>*>& trusted) {
  Pres restricted(loc.name() + ".cleared", loc.generators());
  for (const auto& r : loc.rules())
    if (!r.localized) restricted.add_rule(r);
  for (std::size_t g = 0; g < loc.size(); ++g) {
    if (!loc.generator(static_cast<GenId>(g)).inverse_of) continue;
    GenId inv = static_cast<GenId>(g), base = *loc.generator(inv).inverse_of;
    restricted.add_rule({{base, inv}, Elem::one(), true});
    restricted.add_rule({{inv, base}, Elem::one(), true});
  }
  for (const auto* r : trusted)
    if (r != &rule && !is_cancellation(*r, loc)) restricted.add_rule(*r);

  // Inverse letters and their largest multiplicity in a single word.
  std::map<GenId, int> need;
  auto scan = [&](const Word& w) {
    std::map<GenId, int> count;
    for (GenId g : w)
      if (loc.generator(g).inverse_of) ++count[g];
    for (const auto& [g, n] : count) need[g] = std::max(need[g], n);
  };
  scan(rule.pattern);
  for (const auto& [w, c] : rule.replacement.terms()) scan(w);

  LocalizedVerdict v;
  if (need.empty()) {
    v.status = LocalizedVerdict::Status::Uncleared;
    v.detail = "rule has no inverse letters";
    return v;
  }
  std::vector<GenId> types;
  for (const auto& [g, n] : need) types.push_back(g);

  // Every (left, right) exponent pair per inverse type, smallest total first.
  struct Combo {
    std::vector<int> left, right;
    int total;
  };
  std::vector<Combo> combos{{{}, {}, 0}};
  for (GenId t : types) {
    std::vector<Combo> next;
    for (const auto& c : combos)
      for (int l = 0; l <= need[t]; ++l)
        for (int r = 0; r <= need[t]; ++r) {
          Combo n = c;
          n.left.push_back(l);
          n.right.push_back(r);
          n.total += l + r;
          next.push_back(std::move(n));
        }
    combos = std::move(next);
  }
  std::stable_sort(combos.begin(), combos.end(), [](const Combo& a, const Combo& b) { return a.total < b.total; });

  std::vector<std::size_t> perm(types.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> orders;
  do orders.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  const Elem lhs = Elem::word(rule.pattern);
  for (const auto& c : combos) {
    if (c.total == 0) continue;
    for (const auto& order : orders) {
      Word left, right;
      std::vector<std::pair<GenId, int>> lf, rf;
      for (std::size_t k : order) {
        GenId base = *loc.generator(types[k]).inverse_of;
        left.insert(left.end(), c.left[k], base);
        right.insert(right.end(), c.right[k], base);
        lf.push_back({base, c.left[k]});
        rf.push_back({base, c.right[k]});
      }
      Elem L, R;
      try {
        Elem lw = Elem::word(left), rw = Elem::word(right);
        L = restricted.normalize(lw * lhs * rw);
        R = restricted.normalize(lw * rule.replacement * rw);
      } catch (const StepBudgetExceeded&) {
        continue;
      }
      if (!inverse_free(L, loc) || !inverse_free(R, loc)) continue;
      v.left_multiplier = power_text(loc, lf);
      v.right_multiplier = power_text(loc, rf);
      v.lhs = loc.format(L);
      v.rhs = loc.format(R);
      v.status = L == R ? LocalizedVerdict::Status::Pass : LocalizedVerdict::Status::Mismatch;
      if (!v.pass()) v.detail = "cleared sides differ: " + v.lhs + " vs " + v.rhs;
      return v;
    }
  }
  v.status = LocalizedVerdict::Status::Uncleared;
  v.detail = "uncleared inverse";
  return v;
}

std::vector<LocalizedRuleReport> verify_localized_rules(const Pres& loc) {
  std::vector<LocalizedRuleReport> reports;
  std::vector<const RewriteRule<LaurentScalar>*> pending, trusted;
  for (const auto& r : loc.rules())
    if (r.localized && !is_cancellation(r, loc)) pending.push_back(&r);
  std::map<const RewriteRule<LaurentScalar>*, LocalizedVerdict> last;
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<const RewriteRule<LaurentScalar>*> still;
    for (const auto* r : pending) {
      LocalizedVerdict v = verify_localized_rule(loc, *r, trusted);
      if (v.status == LocalizedVerdict::Status::Uncleared) {
        last[r] = v;
        still.push_back(r);
        continue;
      }
      reports.push_back({r, v});
      if (v.pass()) trusted.push_back(r);
      progress = true;
    }
    pending = std::move(still);
  }
  for (const auto* r : pending) reports.push_back({r, last[r]});
  return reports;
}

CheckList localized_rule_checks(const Catalog& cat, const std::string& only_inverse) {
  const CatalogEntry* loc = &cat.entry("Omega_loc");
  const Pres& p = loc->presentation();
  // The dependency-ordered validation runs once, on first use.
  struct Shared {
    std::once_flag once;
    std::vector<LocalizedRuleReport> reports;
  };
  auto shared = std::make_shared<Shared>();
  CheckList out;
  for (const auto& rule : p.rules()) {
    if (!rule.localized || is_cancellation(rule, p)) continue;
    if (!only_inverse.empty()) {
      bool mentions = false;
      for (GenId g : rule.pattern)
        if (p.generator(g).name == only_inverse) mentions = true;
      if (!mentions) continue;
    }
    const RewriteRule<LaurentScalar>* r = &rule;
    std::string pat = p.format_word(rule.pattern);
    out.push_back({"localized." + pat, pat + " -> " + p.format(rule.replacement) + " clears to a relation of Omega",
                   "localized", [shared, loc, r] {
                     std::call_once(shared->once, [&] { shared->reports = verify_localized_rules(loc->presentation()); });
                     for (const auto& rep : shared->reports)
                       if (rep.rule == r) return rep.verdict.pass() ? Outcome::ok() : Outcome::failed(rep.verdict.detail);
                     return Outcome::failed("rule was not examined");
                   }});
  }
  return out;
}

}  // namespace qdc
