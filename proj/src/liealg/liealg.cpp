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

#include "liealg/liealg.hpp"

#include <map>

#include "calculus/calculus.hpp"

namespace qdc {

Check confluence_check(const CatalogEntry& entry, std::size_t max_degree, const std::string& label) {
  const CatalogEntry* e = &entry;
  return {"confluence." + entry.name() + ".deg" + std::to_string(max_degree),
          "every overlap of " + entry.name() + " up to degree " + std::to_string(max_degree) + " resolves", label,
          [e, max_degree] {
            const Pres& p = e->presentation();
            auto rep = check_local_confluence(p, max_degree);
            if (rep.ok()) return Outcome::ok();
            std::string r = std::to_string(rep.failures.size()) + " failing overlaps of " +
                            std::to_string(rep.ambiguities) + "; first:";
            for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i)
              r += " " + p.format_word(rep.failures[i].word) + " -> " + p.format(rep.failures[i].difference) + ";";
            return Outcome::failed(r);
          }};
}

CheckList verify_superalgebra(const Catalog& cat, std::size_t max_degree) {
  const CatalogEntry& sup = cat.entry("SuperAlg");
  const CatalogEntry& lie = cat.entry("LieAlg");
  CheckList out = identity_checks(sup, "superalgebra");
  auto cross = identity_checks(lie, "superalgebra.cross");
  out.insert(out.end(), cross.begin(), cross.end());
  auto cons = identity_checks(lie, "superalgebra.consistency");
  out.insert(out.end(), cons.begin(), cons.end());
  out.push_back(confluence_check(sup, max_degree, "superalgebra"));
  out.push_back(confluence_check(lie, max_degree, "superalgebra.cross"));
  return out;
}

CheckList verify_xy_basis(const Catalog& cat) { return identity_checks(cat.entry("SuperAlg"), "superalgebra.xy"); }

CheckList verify_cross_relations_consistency(const Catalog& cat) {
  const CatalogEntry* lie = &cat.entry("LieAlg");
  const Pres& p = lie->presentation();
  const char* algebra[] = {"T1", "T2", "nabla_p", "nabla_m"};
  const char* group[] = {"a", "beta", "gamma", "d"};
  CheckList out;
  for (const char* l1 : algebra)
    for (const char* l2 : algebra)
      for (const char* g : group) {
        Word w{p.id(l1), p.id(l2), p.id(g)};
        std::string text = p.format_word(w);
        out.push_back({"cross." + text, "(" + std::string(l1) + "*" + l2 + ")*" + g + " = " + l1 + "*(" + l2 + "*" + g + ")",
                       "superalgebra.cross", [lie, w] {
                         const Pres& pr = lie->presentation();
                         Elem head = pr.normalize(Elem::word({w[0], w[1]}));
                         Elem tail = pr.normalize(Elem::word({w[1], w[2]}));
                         Elem first = pr.normalize(head * Elem::word({w[2]}));
                         Elem second = pr.normalize(Elem::word({w[0]}) * tail);
                         return zero_outcome(first - second, pr);
                       }});
      }
  return out;
}

CheckList verify_classical_limit(const Catalog& cat) {
  const CatalogEntry* sup = &cat.entry("SuperAlg");
  // Undeformed gl(1|1) brackets.
  static const std::map<std::string, std::pair<std::string, std::string>> classical = {
      {"superalgebra.T1_np", {"T1*nabla_p - nabla_p*T1", "-nabla_p"}},
      {"superalgebra.T2_np", {"T2*nabla_p - nabla_p*T2", "nabla_p"}},
      {"superalgebra.T1_nm", {"T1*nabla_m - nabla_m*T1", "nabla_m"}},
      {"superalgebra.T2_nm", {"T2*nabla_m - nabla_m*T2", "-nabla_m"}},
      {"superalgebra.T1_T2", {"T1*T2 - T2*T1", "0"}},
      {"superalgebra.np_sq", {"nabla_p^2", "0"}},
      {"superalgebra.nm_sq", {"nabla_m^2", "0"}},
      {"superalgebra.anti", {"nabla_m*nabla_p + nabla_p*nabla_m", "T1 + T2"}},
  };
  CheckList out;
  for (const Identity* id : sup->identities("superalgebra")) {
    auto it = classical.find(id->id);
    std::string lhs = it == classical.end() ? "" : it->second.first;
    std::string rhs = it == classical.end() ? "" : it->second.second;
    out.push_back({"classical." + id->id, "at q = 1: " + lhs + " = " + rhs, "superalgebra", [sup, id, lhs, rhs] {
                     if (lhs.empty()) return Outcome::failed("no undeformed form recorded");
                     Resolver r = sup->resolver();
                     r.q = LaurentScalar(1);
                     // Compared in the free algebra: no relation is used.
                     Elem deformed = evaluate(id->lhs, r) - evaluate(id->rhs, r);
                     Elem plain = evaluate(parse_expr(lhs), r) - evaluate(parse_expr(rhs), r);
                     Elem diff = deformed - plain;
                     if (diff.is_zero()) return Outcome::ok();
                     return Outcome::failed(sup->presentation().format(diff));
                   }});
  }
  return out;
}

}  // namespace qdc
