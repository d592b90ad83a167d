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

#include "catalog/catalog.hpp"

#include <algorithm>
#include <set>

#include "ring/errors.hpp"

namespace qdc {

namespace {

struct Sourced {
  const Statement* st;
  std::string doc;
};

[[noreturn]] void fail(const std::string& doc, const Statement* st, const std::string& msg) {
  std::string where = "catalog " + doc;
  if (st) where += " line " + std::to_string(st->line);
  throw InvalidInputError(where + ": " + msg);
}

// Relation ids each presentation must state, grouped by relation family.
struct Coverage {
  const char* presentation;
  const char* prefix;
  std::vector<const char*> keys;
};

const std::vector<Coverage>& coverage_table() {
  static const std::vector<Coverage> table = {
      {"A_glq11", "glq11.", {"a_beta", "d_beta", "a_gamma", "d_gamma", "beta_gamma", "beta_sq", "gamma_sq", "a_d"}},
      {"A_hat", "hat.", {"Da_Dbeta", "Dd_Dbeta", "Da_Dgamma", "Dd_Dgamma", "Da_Dd", "Da_sq", "Dd_sq", "Dbeta_Dgamma"}},
      {"Omega", "mixed.", {"a_Da", "a_Dbeta", "beta_Da", "beta_Dbeta", "a_Dgamma", "a_Dd", "beta_Dgamma", "beta_Dd",
                           "gamma_Da", "gamma_Dbeta", "gamma_Dgamma", "gamma_Dd", "d_Da", "d_Dbeta", "d_Dgamma", "d_Dd"}},
      {"Omega_loc", "inverse.", {"a_A", "d_A", "a_D", "d_D", "a_B", "d_B", "a_C", "d_C", "beta_A", "gamma_A", "beta_D",
                                 "gamma_D", "beta_B", "gamma_B", "beta_C", "gamma_C", "A_Da", "A_Dd", "A_Dbeta",
                                 "A_Dgamma", "D_Da", "D_Dd", "D_Dbeta", "D_Dgamma", "B_Da", "B_Dgamma", "B_Dbeta",
                                 "B_Dd", "C_Da", "C_Dbeta", "C_Dgamma", "C_Dd"}},
      {"Omega_loc", "forms.", {"a_w1", "d_w2", "a_w2", "d_w1", "a_u", "d_u", "a_v", "d_v", "beta_w1", "gamma_w2",
                               "beta_w2", "gamma_w1", "beta_u", "gamma_u", "beta_v", "gamma_v", "w1_u", "u_w2", "w1_v",
                               "w2_v", "w1_sq", "w2_sq", "u_v", "w1_w2", "Da", "Dbeta", "Dd", "Dgamma"}},
      {"SuperAlg", "superalgebra.", {"T1_np", "T2_np", "T1_nm", "T2_nm", "T1_T2", "np_sq", "nm_sq", "anti"}},
      {"SuperAlg", "xy.", {"X_np", "X_nm", "X_Y", "np_sq", "nm_sq", "Y_np", "Y_nm", "anti"}},
      {"LieAlg", "cross.", {"T1_a", "T1_beta", "T1_gamma", "T1_d", "T2_a", "T2_d", "T2_beta", "T2_gamma", "np_a", "np_d",
                            "np_beta", "np_gamma", "nm_a", "nm_d", "nm_beta", "nm_gamma"}},
      {"LieAlg", "consistency.", {"np_sq", "nm_sq", "T1_nm", "T2_nm", "T1_T2", "anti"}},
      {"Plane", "plane.", {"x_theta", "theta_sq"}},
      {"DualPlane", "plane.", {"phi_sq", "phi_y"}},
  };
  return table;
}

}  // namespace

std::vector<const Identity*> CatalogEntry::identities(std::string_view label) const {
  std::vector<const Identity*> out;
  for (const auto& i : identities_)
    if (i.label == label) out.push_back(&i);
  return out;
}

const Identity& CatalogEntry::identity(const std::string& id) const {
  for (const auto& i : identities_)
    if (i.id == id) return i;
  throw UnknownNameError("unknown identity '" + id + "' in " + name());
}

const Elem& CatalogEntry::define(const std::string& n) const {
  auto it = defines_.find(n);
  if (it == defines_.end()) throw UnknownNameError("unknown element '" + n + "' in " + name());
  return it->second;
}

const DerivationSpec<LaurentScalar>& CatalogEntry::derivation(const std::string& n) const {
  auto it = derivations_.find(n);
  if (it == derivations_.end()) throw UnknownNameError("unknown derivation '" + n + "' in " + name());
  return it->second;
}

Resolver CatalogEntry::resolver() const {
  Resolver r;
  r.q = q_;
  r.name = [this](const std::string& n) -> std::optional<Elem> {
    if (auto g = pres_.find(n)) return Elem::word({*g});
    auto it = defines_.find(n);
    if (it != defines_.end()) return it->second;
    return std::nullopt;
  };
  r.inverse = [this](const std::string& n) -> std::optional<Elem> {
    auto g = pres_.find(n);
    if (!g) return std::nullopt;
    auto inv = pres_.inverse(*g);
    if (!inv) return std::nullopt;
    return Elem::word({*inv});
  };
  return r;
}

Elem CatalogEntry::parse(std::string_view text) const { return evaluate_expr(parse_expr(text)); }

Elem CatalogEntry::residual(const Identity& id) const {
  return pres_.normalize(evaluate_expr(id.lhs) - evaluate_expr(id.rhs));
}

Catalog::Catalog(std::optional<Rational> q0)
    : Catalog(
          [] {
            std::vector<std::pair<std::string, std::string>> docs;
            for (const auto& [n, t] : embedded_documents()) docs.emplace_back(std::string(n), std::string(t));
            return docs;
          }(),
          std::move(q0)) {}

Catalog::Catalog(std::vector<std::pair<std::string, std::string>> documents, std::optional<Rational> q0)
    : q0_(std::move(q0)) {
  if (q0_ && *q0_ == 0) throw DomainError("q must be nonzero");
  for (auto& [file, text] : documents) {
    Document d = parse_document(text);
    const std::string name = d.name();
    if (docs_.count(name)) throw InvalidInputError("duplicate catalog document " + name);
    sources_.emplace(name, std::move(text));
    docs_.emplace(name, std::move(d));
  }
  for (const auto& [name, doc] : docs_) entries_.emplace(name, compile(name));
}

LaurentScalar Catalog::q() const { return q0_ ? LaurentScalar(*q0_) : LaurentScalar::q(); }

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, d] : docs_) out.push_back(n);
  return out;
}

const CatalogEntry& Catalog::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownNameError("unknown presentation '" + name + "'");
  return *it->second;
}

const Document& Catalog::document(const std::string& name) const {
  auto it = docs_.find(name);
  if (it == docs_.end()) throw UnknownNameError("unknown presentation '" + name + "'");
  return it->second;
}

const std::string& Catalog::source_text(const std::string& name) const {
  auto it = sources_.find(name);
  if (it == sources_.end()) throw UnknownNameError("unknown presentation '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::coverage_audit() const {
  std::vector<std::string> missing;
  for (const auto& c : coverage_table()) {
    const CatalogEntry* e = contains(c.presentation) ? &entry(c.presentation) : nullptr;
    for (const char* k : c.keys) {
      std::string id = std::string(c.prefix) + k;
      bool found = false;
      if (e)
        for (const auto& i : e->identities())
          if (i.id == id) found = true;
      if (!found) missing.push_back(std::string(c.presentation) + ":" + id);
    }
  }
  return missing;
}

std::unique_ptr<CatalogEntry> Catalog::compile(const std::string& name) const {
  // Flatten includes depth first, each document at most once.
  std::vector<Sourced> flat;
  std::set<std::string> seen, active;
  auto visit = [&](auto&& self, const std::string& n, const Statement* from, const std::string& parent) -> void {
    if (active.count(n)) fail(parent, from, "include cycle through " + n);
    if (seen.count(n)) return;
    auto it = docs_.find(n);
    if (it == docs_.end()) fail(parent, from, "unknown include " + n);
    seen.insert(n);
    active.insert(n);
    for (const auto& st : it->second.statements) {
      if (st.kind == Statement::Kind::Include) self(self, st.name, &st, n);
      else flat.push_back({&st, n});
    }
    active.erase(n);
  };
  visit(visit, name, nullptr, name);

  struct GenDecl {
    std::string name;
    int parity;
    std::optional<std::string> inverse_of;
  };
  std::vector<GenDecl> gens;
  for (const auto& [st, doc] : flat) {
    if (st->kind == Statement::Kind::Generator) {
      for (const auto& g : gens)
        if (g.name == st->name) fail(doc, st, "duplicate generator " + st->name);
      gens.push_back({st->name, st->parity, st->inverse_of});
    } else if (st->kind == Statement::Kind::Order) {
      std::vector<GenDecl> reordered;
      for (const auto& n : st->names) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const GenDecl& g) { return g.name == n; });
        if (it == gens.end()) fail(doc, st, "order names unknown generator " + n);
        reordered.push_back(*it);
      }
      std::set<std::string> distinct(st->names.begin(), st->names.end());
      if (distinct.size() != st->names.size() || reordered.size() != gens.size())
        fail(doc, st, "order must list every generator exactly once");
      gens = std::move(reordered);
    }
  }

  std::vector<Generator> pg;
  for (const auto& g : gens) pg.push_back({g.name, g.parity, std::nullopt});
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].inverse_of) continue;
    auto it = std::find_if(gens.begin(), gens.end(), [&](const GenDecl& g) { return g.name == *gens[i].inverse_of; });
    if (it == gens.end()) fail(name, nullptr, "inverse of unknown generator " + *gens[i].inverse_of);
    pg[i].inverse_of = static_cast<GenId>(it - gens.begin());
  }

  auto entry = std::unique_ptr<CatalogEntry>(new CatalogEntry());
  entry->q_ = q();
  entry->pres_ = Pres(name, std::move(pg));
  Pres& pres = entry->pres_;

  for (const auto& [st, doc] : flat) {
    try {
      switch (st->kind) {
        case Statement::Kind::Rule:
        case Statement::Kind::Localized: {
          Word pattern;
          for (const auto& n : st->names) pattern.push_back(pres.id(n));
          // Replacements may only mention generators here.
          Resolver r;
          r.q = entry->q_;
          r.name = [&pres](const std::string& n) -> std::optional<Elem> {
            if (auto g = pres.find(n)) return Elem::word({*g});
            return std::nullopt;
          };
          r.inverse = entry->resolver().inverse;
          pres.add_rule({pattern, evaluate(st->rhs, r), st->kind == Statement::Kind::Localized});
          break;
        }
        case Statement::Kind::Free:
          pres.declare_free(pres.id(st->names[0]), pres.id(st->names[1]));
          break;
        case Statement::Kind::Define: {
          if (entry->defines_.count(st->name) || pres.find(st->name)) fail(doc, st, "name " + st->name + " already used");
          Elem v = entry->evaluate_expr(st->rhs);
          entry->defines_.emplace(st->name, std::move(v));
          entry->define_order_.push_back(st->name);
          break;
        }
        default:
          break;
      }
    } catch (const InvalidInputError&) {
      throw;
    } catch (const std::exception& ex) {
      fail(doc, st, ex.what());
    }
  }
  try {
    pres.validate();
  } catch (const std::exception& ex) {
    fail(name, nullptr, ex.what());
  }

  for (const auto& [st, doc] : flat) {
    try {
      if (st->kind == Statement::Kind::Derivation) {
        auto& spec = entry->derivations_[st->name];
        spec.name = st->name;
        spec.images.resize(pres.size());
        GenId g = pres.id(st->label);
        if (spec.images[g]) fail(doc, st, "second image for " + st->label);
        Elem img = pres.normalize(entry->evaluate_expr(st->rhs));
        auto pi = pres.parity(img);
        if (pi && *pi != (pres.parity(g) ^ spec.parity)) fail(doc, st, "derivation image has the wrong parity");
        spec.images[g] = std::move(img);
      } else if (st->kind == Statement::Kind::Identity) {
        for (const auto& i : entry->identities_)
          if (i.id == st->name) fail(doc, st, "duplicate identity " + st->name);
        Elem l = entry->evaluate_expr(st->lhs), r = entry->evaluate_expr(st->rhs);
        auto pl = pres.parity(l), pr = pres.parity(r);
        if ((!l.is_zero() && !pl) || (!r.is_zero() && !pr) || (pl && pr && *pl != *pr))
          fail(doc, st, "identity " + st->name + " is not parity balanced");
        entry->identities_.push_back({st->name, st->label, doc, st->lhs, st->rhs});
      }
    } catch (const InvalidInputError&) {
      throw;
    } catch (const std::exception& ex) {
      fail(doc, st, ex.what());
    }
  }
  return entry;
}

}  // namespace qdc
