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

#include <string>
#include <vector>

#include "catalog/catalog.hpp"
#include "kernel/check.hpp"

namespace qdc {

// Exterior differential on Omega_loc (graded Leibniz, normalized).
Elem exterior_d(const CatalogEntry& omega_loc, const Elem& e);

// Check reducing lhs - rhs of a catalog identity in its presentation.
Check identity_check(const CatalogEntry& entry, const Identity& id);
CheckList identity_checks(const CatalogEntry& entry, const std::string& label);

// Relation families: T_inverse, inverse_differential, T_forms, forms,
// forms_to_dT, dT_relations, unit.
CheckList verify_family(const Catalog& cat, const std::string& family);
const std::vector<std::string>& family_names();

// Consistency of the Forms rules with the composites w1, u, v, w2 of Omega_loc.
CheckList forms_rule_checks(const Catalog& cat);

// d^2 = 0 on generators and random words; d of the body and mixed rules.
CheckList differential_checks(const Catalog& cat, std::size_t random_words = 100, unsigned seed = 20260101);

// Leibniz-forced d on inverses: d(g*g^-1) = 0.
CheckList inverse_differential_checks(const Catalog& cat);

// Structure equations: d of the composites, dW = s3 W s3 W, and the reduced
// form using the two-form relations.
CheckList structure_checks(const Catalog& cat);

struct LocalizedVerdict {
  enum class Status { Pass, Mismatch, Uncleared };
  Status status = Status::Uncleared;
  std::string left_multiplier, right_multiplier;
  std::string lhs, rhs;  // cleared, reduced sides
  std::string detail;
  bool pass() const { return status == Status::Pass; }
};

// Clears the inverses of a localized rule by multiplying with the inverted
// generators and compares both sides reduced without localized rules
// (plus g*g^-1 -> 1, g^-1*g -> 1 and any trusted rules).
LocalizedVerdict verify_localized_rule(const Pres& loc, const RewriteRule<LaurentScalar>& rule,
                                       const std::vector<const RewriteRule<LaurentScalar>*>& trusted = {});

// All derived localized rules of a presentation, validated in dependency order.
struct LocalizedRuleReport {
  const RewriteRule<LaurentScalar>* rule;
  LocalizedVerdict verdict;
};
std::vector<LocalizedRuleReport> verify_localized_rules(const Pres& loc);
CheckList localized_rule_checks(const Catalog& cat, const std::string& only_inverse = "");

}  // namespace qdc
