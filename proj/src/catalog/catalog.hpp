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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog/document.hpp"
#include "cli/expr.hpp"
#include "kernel/derivation.hpp"
#include "kernel/presentation.hpp"

namespace qdc {

struct Identity {
  std::string id;
  std::string label;
  std::string source;  // document that states it
  Expr lhs;
  Expr rhs;
};

class CatalogEntry {
 public:
  const std::string& name() const { return pres_.name(); }
  const Pres& presentation() const { return pres_; }
  const LaurentScalar& q() const { return q_; }

  const std::vector<Identity>& identities() const { return identities_; }
  std::vector<const Identity*> identities(std::string_view label) const;
  const Identity& identity(const std::string& id) const;

  const std::vector<std::string>& define_names() const { return define_order_; }
  bool has_define(const std::string& n) const { return defines_.count(n) > 0; }
  const Elem& define(const std::string& n) const;  // unreduced
  Elem reduced_define(const std::string& n) const { return pres_.normalize(define(n)); }

  const std::map<std::string, DerivationSpec<LaurentScalar>>& derivations() const { return derivations_; }
  const DerivationSpec<LaurentScalar>& derivation(const std::string& n) const;

  Resolver resolver() const;
  Elem evaluate(const Expr& e) const { return evaluate_expr(e); }
  Elem parse(std::string_view text) const;
  // lhs - rhs reduced.
  Elem residual(const Identity& id) const;

 private:
  friend class Catalog;
  Elem evaluate_expr(const Expr& e) const { return qdc::evaluate(e, resolver()); }

  Pres pres_;
  LaurentScalar q_ = LaurentScalar::q();
  std::vector<Identity> identities_;
  std::map<std::string, Elem> defines_;
  std::vector<std::string> define_order_;
  std::map<std::string, DerivationSpec<LaurentScalar>> derivations_;
};

// Embedded presentation documents: (name, text).
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_documents();

class Catalog {
 public:
  // With q0 set every occurrence of q is bound to that rational.
  explicit Catalog(std::optional<Rational> q0 = std::nullopt);
  Catalog(std::vector<std::pair<std::string, std::string>> documents, std::optional<Rational> q0);

  bool numeric() const { return q0_.has_value(); }
  const std::optional<Rational>& q_value() const { return q0_; }
  LaurentScalar q() const;

  std::vector<std::string> names() const;
  bool contains(const std::string& name) const { return docs_.count(name) > 0; }
  const CatalogEntry& entry(const std::string& name) const;
  const Pres& presentation(const std::string& name) const { return entry(name).presentation(); }
  const Document& document(const std::string& name) const;
  const std::string& source_text(const std::string& name) const;

  // Identity ids expected by the coverage table but absent from the catalog.
  std::vector<std::string> coverage_audit() const;

 private:
  std::unique_ptr<CatalogEntry> compile(const std::string& name) const;

  std::optional<Rational> q0_;
  std::map<std::string, std::string> sources_;
  std::map<std::string, Document> docs_;
  std::map<std::string, std::unique_ptr<CatalogEntry>> entries_;
};

}  // namespace qdc
