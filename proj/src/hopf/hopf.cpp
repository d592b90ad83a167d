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

#include "hopf/hopf.hpp"

#include <memory>
#include <mutex>

#include "calculus/calculus.hpp"
#include "ring/errors.hpp"

namespace qdc {

namespace {

const char* kBody[2][2] = {{"a", "beta"}, {"gamma", "d"}};
const char* kDiff[2][2] = {{"Da", "Dbeta"}, {"Dgamma", "Dd"}};
const char* kInverse[2][2] = {{"iA", "iB"}, {"iC", "iD"}};

struct ExplicitTerm {
  int sign;
  const char* left;
  const char* right;
};

// Differential coproduct written out, entry by entry.
const std::vector<std::pair<const char*, std::vector<ExplicitTerm>>>& explicit_delta_hat() {
  static const std::vector<std::pair<const char*, std::vector<ExplicitTerm>>> table = {
      {"Da", {{1, "Da", "a"}, {1, "Dbeta", "gamma"}, {1, "a", "Da"}, {-1, "beta", "Dgamma"}}},
      {"Dbeta", {{1, "Dbeta", "d"}, {1, "Da", "beta"}, {1, "a", "Dbeta"}, {-1, "beta", "Dd"}}},
      {"Dgamma", {{1, "Dgamma", "a"}, {1, "Dd", "gamma"}, {-1, "gamma", "Da"}, {1, "d", "Dgamma"}}},
      {"Dd", {{1, "Dd", "d"}, {1, "Dgamma", "beta"}, {-1, "gamma", "Dbeta"}, {1, "d", "Dd"}}},
  };
  return table;
}

int index_parity(int i, int k) { return (i + k) % 2; }

TensorElement pure2(const Pres& p, const char* l, const char* r, int sign = 1) {
  return TensorElement::pure({Word{p.id(l)}, Word{p.id(r)}}, LaurentScalar(sign));
}

}  // namespace

HopfData::HopfData(const CatalogEntry& omega_loc) : entry_(&omega_loc) {
  const Pres& p = presentation();
  const std::size_t n = p.size();
  delta_.assign(n, std::nullopt);
  eps_.assign(n, std::nullopt);
  s_.assign(n, std::nullopt);

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TensorElement t;
      for (int k = 0; k < 2; ++k) t += pure2(p, kBody[i][k], kBody[k][j]);
      delta_[p.id(kBody[i][j])] = t;
      eps_[p.id(kBody[i][j])] = LaurentScalar(i == j ? 1 : 0);
      eps_[p.id(kDiff[i][j])] = LaurentScalar(0);
    }
  for (const auto& [g, terms] : explicit_delta_hat()) {
    TensorElement t;
    for (const auto& pt : terms) t += pure2(p, pt.left, pt.right, pt.sign);
    delta_[p.id(g)] = t;
  }

  // Delta(g^-1) = sum_k (-N)^k (g^-1 x g^-1) with N = (g^-1 x g^-1)(Delta(g) - g x g).
  for (const char* name : {"a", "d"}) {
    GenId g = p.id(name);
    GenId h = *p.inverse(g);
    TensorElement hh = TensorElement::pure({Word{h}, Word{h}});
    TensorElement rest = *delta_[g] - TensorElement::pure({Word{g}, Word{g}});
    TensorElement nn = normalize(p, koszul_multiply(p, hh, rest));
    TensorElement sum, power = TensorElement::one();
    int k = 0;
    while (!power.is_zero()) {
      if (++k > 32) throw DomainError("coproduct series for " + p.generator(h).name + " does not terminate");
      sum += power;
      power = normalize(p, koszul_multiply(p, power, nn)).scaled(LaurentScalar(-1));
    }
    delta_[h] = normalize(p, koszul_multiply(p, sum, hh));
    eps_[h] = LaurentScalar(1);
  }

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s_[p.id(kBody[i][j])] = p.normalize(omega_loc.define(kInverse[i][j]));
  s_[p.id("a_inv")] = p.normalize(omega_loc.parse("a - beta*d_inv*gamma"));
  s_[p.id("d_inv")] = p.normalize(omega_loc.parse("d - gamma*a_inv*beta"));
  // S(dT)_ij = -sum_kl (-1)^p(Tinv_ik) Tinv_ik dT_kl Tinv_lj.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Elem e;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          Elem t = omega_loc.define(kInverse[i][k]) * p.gen(kDiff[k][l]) * omega_loc.define(kInverse[l][j]);
          e -= index_parity(i, k) ? -t : t;
        }
      s_[p.id(kDiff[i][j])] = p.normalize(e);
    }
}

const TensorElement& HopfData::coproduct(GenId g) const {
  if (!delta_.at(g)) throw DomainError("coproduct of " + presentation().generator(g).name + " is not defined");
  return *delta_[g];
}

const LaurentScalar& HopfData::counit(GenId g) const {
  if (!eps_.at(g)) throw DomainError("counit of " + presentation().generator(g).name + " is not defined");
  return *eps_[g];
}

const Elem& HopfData::antipode(GenId g) const {
  if (!s_.at(g)) throw DomainError("antipode of " + presentation().generator(g).name + " is not defined");
  return *s_[g];
}

TensorElement HopfData::word_coproduct(const Word& w) const {
  const Pres& p = presentation();
  TensorElement t = TensorElement::one();
  for (GenId g : w) t = normalize(p, koszul_multiply(p, t, coproduct(g)));
  return t;
}

TensorElement HopfData::coproduct(const Elem& e) const {
  TensorElement r;
  for (const auto& [w, c] : e.terms()) r += word_coproduct(w).scaled(c);
  return r;
}

LaurentScalar HopfData::counit(const Elem& e) const {
  LaurentScalar r;
  for (const auto& [w, c] : e.terms()) {
    LaurentScalar t = c;
    for (GenId g : w) t *= counit(g);
    r += t;
  }
  return r;
}

// S(x1...xn) = (-1)^(sum_{i<j} p_i p_j) S(xn)...S(x1).
Elem HopfData::word_antipode(const Word& w) const {
  const Pres& p = presentation();
  int sign = 0, odd = 0;
  Elem r = Elem::one();
  for (GenId g : w) {
    int pg = p.parity(g);
    sign ^= pg & odd;
    odd ^= pg;
    r = p.normalize(antipode(g) * r);
  }
  return sign ? -r : r;
}

Elem HopfData::antipode(const Elem& e) const {
  Elem r;
  for (const auto& [w, c] : e.terms()) r += word_antipode(w).scaled(c);
  return r;
}

TensorElement HopfData::coproduct_matrix_form(GenId dg) const {
  const Pres& p = presentation();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (p.id(kDiff[i][j]) != dg) continue;
      TensorElement t;
      for (int k = 0; k < 2; ++k) {
        t += pure2(p, kDiff[i][k], kBody[k][j]);
        t += pure2(p, kBody[i][k], kDiff[k][j], index_parity(i, k) ? -1 : 1);
      }
      return t;
    }
  throw InvalidInputError(p.generator(dg).name + " is not a differential generator");
}

Tensor<3> HopfData::coproduct_left(const TensorElement& t) const {
  Tensor<3> r;
  for (const auto& [k, c] : t.terms()) {
    TensorElement d = word_coproduct(k[0]);
    for (const auto& [k2, c2] : d.terms()) r.add({k2[0], k2[1], k[1]}, c * c2);
  }
  return normalize(presentation(), r);
}

Tensor<3> HopfData::coproduct_right(const TensorElement& t) const {
  Tensor<3> r;
  for (const auto& [k, c] : t.terms()) {
    TensorElement d = word_coproduct(k[1]);
    for (const auto& [k2, c2] : d.terms()) r.add({k[0], k2[0], k2[1]}, c * c2);
  }
  return normalize(presentation(), r);
}

Elem HopfData::counit_left(const TensorElement& t) const {
  Elem r;
  for (const auto& [k, c] : t.terms()) r += Elem::word(k[1], c * counit(Elem::word(k[0])));
  return presentation().normalize(r);
}

Elem HopfData::counit_right(const TensorElement& t) const {
  Elem r;
  for (const auto& [k, c] : t.terms()) r += Elem::word(k[0], c * counit(Elem::word(k[1])));
  return presentation().normalize(r);
}

Elem HopfData::antipode_left(const TensorElement& t) const {
  Elem r;
  for (const auto& [k, c] : t.terms()) r += (word_antipode(k[0]) * Elem::word(k[1])).scaled(c);
  return presentation().normalize(r);
}

Elem HopfData::antipode_right(const TensorElement& t) const {
  Elem r;
  for (const auto& [k, c] : t.terms()) r += (Elem::word(k[0]) * word_antipode(k[1])).scaled(c);
  return presentation().normalize(r);
}

namespace {

struct LazyHopf {
  const CatalogEntry* entry;
  std::once_flag once;
  std::unique_ptr<HopfData> data;
  const HopfData& get() {
    std::call_once(once, [this] { data = std::make_unique<HopfData>(*entry); });
    return *data;
  }
};

Outcome tensor_zero(const Pres& p, const TensorElement& t) {
  return t.is_zero() ? Outcome::ok() : Outcome::failed(format_tensor(p, t));
}

std::string rule_family(const Pres& p, const RewriteRule<LaurentScalar>& r) {
  bool diff = false, body = false;
  for (GenId g : r.pattern) {
    if (p.generator(g).inverse_of) return "inverse";
    (p.generator(g).name[0] == 'D' ? diff : body) = true;
  }
  return diff && body ? "mixed" : diff ? "hat" : "glq11";
}

}  // namespace

CheckList verify_hopf_axioms(const Catalog& cat) {
  const CatalogEntry& loc = cat.entry("Omega_loc");
  const Pres& p = loc.presentation();
  auto hopf = std::make_shared<LazyHopf>();
  hopf->entry = &loc;
  CheckList out;
  const char* gens[] = {"a", "beta", "gamma", "d", "Da", "Dbeta", "Dgamma", "Dd", "a_inv", "d_inv"};
  for (const char* name : gens) {
    GenId g = p.id(name);
    std::string n = name;
    out.push_back({"hopf.coassoc." + n, "(Delta x id) Delta(" + n + ") = (id x Delta) Delta(" + n + ")", "hopf.coassoc",
                   [hopf, g] {
                     const HopfData& h = hopf->get();
                     const TensorElement& t = h.coproduct(g);
                     Tensor<3> diff = h.coproduct_left(t) - h.coproduct_right(t);
                     return diff.is_zero() ? Outcome::ok() : Outcome::failed(format_tensor(h.presentation(), diff));
                   }});
    out.push_back({"hopf.counit." + n, "mu (eps x id) Delta(" + n + ") = " + n + " = mu' (id x eps) Delta(" + n + ")",
                   "hopf.counit", [hopf, g] {
                     const HopfData& h = hopf->get();
                     const Pres& pr = h.presentation();
                     const TensorElement& t = h.coproduct(g);
                     Elem x = Elem::word({g});
                     Elem l = h.counit_left(t) - x, r = h.counit_right(t) - x;
                     if (!l.is_zero()) return Outcome::failed("left: " + pr.format(l));
                     if (!r.is_zero()) return Outcome::failed("right: " + pr.format(r));
                     return Outcome::ok();
                   }});
    out.push_back({"hopf.antipode." + n, "m (S x id) Delta(" + n + ") = eps(" + n + ") = m (id x S) Delta(" + n + ")",
                   "hopf.antipode", [hopf, g] {
                     const HopfData& h = hopf->get();
                     const Pres& pr = h.presentation();
                     const TensorElement& t = h.coproduct(g);
                     Elem e(h.counit(g));
                     Elem l = h.antipode_left(t) - e, r = h.antipode_right(t) - e;
                     if (!l.is_zero()) return Outcome::failed("left: " + pr.format(l));
                     if (!r.is_zero()) return Outcome::failed("right: " + pr.format(r));
                     return Outcome::ok();
                   }});
  }
  for (const auto& [name, terms] : explicit_delta_hat()) {
    GenId g = p.id(name);
    std::string n = name;
    out.push_back({"hopf.delta_hat." + n, "explicit Delta(" + n + ") equals the matrix form", "hopf.delta_hat",
                   [hopf, g] {
                     const HopfData& h = hopf->get();
                     return tensor_zero(h.presentation(), h.coproduct(g) - h.coproduct_matrix_form(g));
                   }});
  }
  const GenId dgi = p.id("Dgamma_inv");
  for (const auto& rule : p.rules()) {
    bool skip = false;
    for (GenId g : rule.pattern) skip |= g == dgi;
    for (const auto& [w, c] : rule.replacement.terms())
      for (GenId g : w) skip |= g == dgi;
    if (skip) continue;
    const RewriteRule<LaurentScalar>* r = &rule;
    std::string pat = p.format_word(rule.pattern);
    std::string fam = rule_family(p, rule);
    out.push_back({"hopf.delta.rule." + pat, "Delta preserves " + pat + " -> " + p.format(rule.replacement),
                   "hopf.hom." + fam, [hopf, r] {
                     const HopfData& h = hopf->get();
                     Elem rel = Elem::word(r->pattern) - r->replacement;
                     return tensor_zero(h.presentation(), h.coproduct(rel));
                   }});
    out.push_back({"hopf.counit.rule." + pat, "eps annihilates " + pat + " - (" + p.format(rule.replacement) + ")",
                   "hopf.hom." + fam, [hopf, r] {
                     const HopfData& h = hopf->get();
                     LaurentScalar v = h.counit(Elem::word(r->pattern) - r->replacement);
                     return v.is_zero() ? Outcome::ok() : Outcome::failed(v.to_string());
                   }});
    out.push_back({"hopf.antipode.rule." + pat, "S preserves " + pat + " -> " + p.format(rule.replacement),
                   "hopf.hom." + fam, [hopf, r] {
                     const HopfData& h = hopf->get();
                     Elem v = h.antipode(Elem::word(r->pattern) - r->replacement);
                     return zero_outcome(h.presentation().normalize(v), h.presentation());
                   }});
  }
  return out;
}

CheckList verify_central_element(const Catalog& cat) {
  const CatalogEntry* loc = &cat.entry("Omega_loc");
  CheckList out;
  for (const char* name : {"a", "beta", "gamma", "d", "Da", "Dbeta", "Dgamma", "Dd"}) {
    std::string n = name;
    out.push_back({"central.commutator." + n, "Dhat*" + n + " - " + n + "*Dhat = 0", "central", [loc, n] {
                     const Pres& p = loc->presentation();
                     Elem dhat = loc->define("Dhat");
                     Elem g = p.gen(n);
                     return zero_outcome(p.normalize(dhat * g - g * dhat), p);
                   }});
  }
  auto rules = localized_rule_checks(cat, "Dgamma_inv");
  out.insert(out.end(), rules.begin(), rules.end());
  return out;
}

}  // namespace qdc
