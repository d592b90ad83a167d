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

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kernel/element.hpp"
#include "kernel/format.hpp"
#include "ring/errors.hpp"

namespace qdc {

struct Generator {
  std::string name;
  int parity = 0;
  std::optional<GenId> inverse_of;
};

template <class C>
struct RewriteRule {
  Word pattern;
  Element<C> replacement;
  bool localized = false;
};

std::uint64_t default_step_budget();
void set_default_step_budget(std::uint64_t budget);

// Ordered generators plus oriented rules. The generator id is its order index.
template <class C>
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<Generator> gens) : name_(std::move(name)), gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!index_.emplace(gens_[i].name, static_cast<GenId>(i)).second)
        throw InvalidInputError("duplicate generator '" + gens_[i].name + "' in " + name_);
    }
    unary_.assign(gens_.size(), -1);
    binary_.assign(gens_.size() * gens_.size(), -1);
    inverse_.assign(gens_.size(), std::nullopt);
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].inverse_of) {
        GenId g = *gens_[i].inverse_of;
        inverse_[g] = static_cast<GenId>(i);
        inverse_[i] = g;
      }
  }
  Presentation(const Presentation& o)
      : name_(o.name_), gens_(o.gens_), index_(o.index_), rules_(o.rules_), unary_(o.unary_),
        binary_(o.binary_), inverse_(o.inverse_), free_pairs_(o.free_pairs_), budget_(o.budget_) {}
  Presentation& operator=(const Presentation& o) {
    if (this != &o) {
      Presentation t(o);
      swap(t);
    }
    return *this;
  }
  Presentation(Presentation&&) = default;
  Presentation& operator=(Presentation&&) = default;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(GenId g) const { return gens_.at(g); }
  const std::vector<RewriteRule<C>>& rules() const { return rules_; }
  const std::set<std::pair<GenId, GenId>>& free_pairs() const { return free_pairs_; }

  std::optional<GenId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  GenId id(const std::string& name) const {
    auto g = find(name);
    if (!g) throw UnknownNameError("unknown generator '" + name + "' in presentation " + name_);
    return *g;
  }
  std::optional<GenId> inverse(GenId g) const { return inverse_.at(g); }
  Element<C> gen(const std::string& name) const { return Element<C>::word({id(name)}); }
  Element<C> word(std::initializer_list<const char*> names) const {
    Word w;
    for (const char* n : names) w.push_back(id(n));
    return Element<C>::word(std::move(w));
  }

  int parity(GenId g) const { return gens_.at(g).parity; }
  int parity(const Word& w) const {
    int p = 0;
    for (GenId g : w) p ^= gens_[g].parity;
    return p;
  }
  // Parity of a homogeneous element; nullopt for zero or mixed parity.
  std::optional<int> parity(const Element<C>& e) const {
    std::optional<int> p;
    for (const auto& [w, c] : e.terms()) {
      int pw = parity(w);
      if (p && *p != pw) return std::nullopt;
      p = pw;
    }
    return p;
  }

  void add_rule(RewriteRule<C> r) {
    if (r.pattern.empty() || r.pattern.size() > 2)
      throw InvalidInputError("rule pattern must have length 1 or 2 in " + name_);
    int slot = r.pattern.size() == 1 ? r.pattern[0] : r.pattern[0] * static_cast<int>(gens_.size()) + r.pattern[1];
    auto& table = r.pattern.size() == 1 ? unary_ : binary_;
    if (table[slot] >= 0) throw InvalidInputError("duplicate rule for " + format_word(r.pattern) + " in " + name_);
    table[slot] = static_cast<int>(rules_.size());
    rules_.push_back(std::move(r));
    clear_cache();
  }
  void declare_free(GenId hi, GenId lo) { free_pairs_.emplace(hi, lo); }

  const RewriteRule<C>* rule_for(GenId g) const {
    int i = unary_[g];
    return i < 0 ? nullptr : &rules_[i];
  }
  const RewriteRule<C>* rule_for(GenId a, GenId b) const {
    int i = binary_[a * gens_.size() + b];
    return i < 0 ? nullptr : &rules_[i];
  }

  // Load-time checks: orientation, parity balance, odd squares, pair coverage.
  void validate() const {
    for (const auto& r : rules_) {
      const int pp = parity(r.pattern);
      for (const auto& [w, c] : r.replacement.terms()) {
        if (parity(w) != pp)
          throw InvalidInputError("parity mismatch in rule " + format_word(r.pattern) + " of " + name_);
        if (!r.localized && !DegLex()(w, r.pattern))
          throw InvalidInputError("rule " + format_word(r.pattern) + " -> ... is not decreasing at term " +
                                  format_word(w) + " in " + name_);
      }
    }
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (gens_[g].parity == 1 && !rule_for(static_cast<GenId>(g)) &&
          !rule_for(static_cast<GenId>(g), static_cast<GenId>(g)))
        throw InvalidInputError("odd generator " + gens_[g].name + " has no square rule in " + name_);
      if (gens_[g].inverse_of && gens_[g].parity != gens_[*gens_[g].inverse_of].parity)
        throw InvalidInputError("inverse parity mismatch for " + gens_[g].name);
    }
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        auto hi = static_cast<GenId>(j), lo = static_cast<GenId>(i);
        if (rule_for(hi) || rule_for(lo)) continue;
        if (!rule_for(hi, lo) && !free_pairs_.count({hi, lo}))
          throw InvalidInputError("pair " + gens_[j].name + "*" + gens_[i].name +
                                  " has no rule and is not declared free in " + name_);
      }
  }

  std::string format_word(const Word& w) const { return qdc::format_word(w, names()); }
  std::string format(const Element<C>& e) const { return format_element(e, names()); }
  std::vector<std::string> names() const {
    std::vector<std::string> n;
    n.reserve(gens_.size());
    for (const auto& g : gens_) n.push_back(g.name);
    return n;
  }

  void set_step_budget(std::uint64_t b) { budget_ = b; }
  std::uint64_t step_budget() const { return budget_ ? budget_ : default_step_budget(); }

  // Reduce to the unique normal form (leftmost strategy via right-appending
  // letters onto a normal prefix; memoized per word).
  Element<C> normalize(const Element<C>& e) const {
    Run run{step_budget(), 0, 0};
    Element<C> out;
    for (const auto& [w, c] : e.terms()) out += nf(w, run).scaled(c);
    return out;
  }
  Element<C> normalize_word(const Word& w) const {
    Run run{step_budget(), 0, 0};
    return nf(w, run);
  }
  bool is_normal(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (rule_for(w[i])) return false;
      if (i + 1 < w.size() && rule_for(w[i], w[i + 1])) return false;
    }
    return true;
  }

  // Single rewrite of the redex starting at pos (pattern length len).
  Element<C> rewrite_at(const Word& w, std::size_t pos, std::size_t len) const {
    const RewriteRule<C>* r = len == 1 ? rule_for(w[pos]) : rule_for(w[pos], w[pos + 1]);
    if (!r) throw InvalidInputError("no redex at position " + std::to_string(pos));
    Word pre(w.begin(), w.begin() + pos), post(w.begin() + pos + len, w.end());
    Element<C> out;
    for (const auto& [rw, rc] : r->replacement.terms()) out.add(concat(concat(pre, rw), post), rc);
    return out;
  }

  void clear_cache() const {
    std::unique_lock lock(cache_->mutex);
    cache_->nf.clear();
  }
  std::size_t cache_size() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->nf.size();
  }

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::unordered_map<Word, Element<C>, WordHash> nf;
  };
  struct Run {
    std::uint64_t budget;
    std::uint64_t steps;
    std::size_t depth;
  };
  static constexpr std::size_t kMaxDepth = 20000;

  void swap(Presentation& o) {
    std::swap(name_, o.name_);
    std::swap(gens_, o.gens_);
    std::swap(index_, o.index_);
    std::swap(rules_, o.rules_);
    std::swap(unary_, o.unary_);
    std::swap(binary_, o.binary_);
    std::swap(inverse_, o.inverse_);
    std::swap(free_pairs_, o.free_pairs_);
    std::swap(budget_, o.budget_);
    std::swap(cache_, o.cache_);
  }

  void step(Run& run) const {
    if (++run.steps > run.budget)
      throw StepBudgetExceeded("step budget of " + std::to_string(run.budget) + " exceeded in " + name_);
  }

  const Element<C>* lookup(const Word& w) const {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->nf.find(w);
    return it == cache_->nf.end() ? nullptr : &it->second;
  }
  const Element<C>& store(const Word& w, Element<C> e) const {
    std::unique_lock lock(cache_->mutex);
    return cache_->nf.try_emplace(w, std::move(e)).first->second;
  }

  struct DepthGuard {
    Run& run;
    const std::string& name;
    explicit DepthGuard(Run& r, const std::string& n) : run(r), name(n) {
      if (++run.depth > kMaxDepth) throw StepBudgetExceeded("reduction depth guard exceeded in " + name);
    }
    ~DepthGuard() { --run.depth; }
  };

  // Normal form of an arbitrary word.
  Element<C> nf(const Word& w, Run& run) const {
    if (w.empty()) return Element<C>::one();
    if (w.size() == 1) return append(Word{}, w[0], run);
    if (const Element<C>* hit = lookup(w)) return *hit;
    Word prefix(w.begin(), w.end() - 1);
    Element<C> head = nf(prefix, run);
    Element<C> result;
    for (const auto& [v, c] : head.terms()) result += append(v, w.back(), run).scaled(c);
    return store(w, std::move(result));
  }

  // Normal form of v*g where v is already normal.
  Element<C> append(const Word& v, GenId g, Run& run) const {
    const RewriteRule<C>* r1 = rule_for(g);
    const RewriteRule<C>* r2 = (r1 || v.empty()) ? nullptr : rule_for(v.back(), g);
    Word vg = v;
    vg.push_back(g);
    if (!r1 && !r2) return Element<C>::word(std::move(vg));
    if (const Element<C>* hit = lookup(vg)) return *hit;
    DepthGuard guard(run, name_);
    step(run);
    Element<C> out;
    if (r1) {
      for (const auto& [rw, rc] : r1->replacement.terms()) out += append_word(v, rw, run).scaled(rc);
    } else {
      Word stem(v.begin(), v.end() - 1);
      for (const auto& [rw, rc] : r2->replacement.terms()) out += append_word(stem, rw, run).scaled(rc);
    }
    return store(vg, std::move(out));
  }

  // Normal form of v*r for normal v and arbitrary r.
  Element<C> append_word(const Word& v, const Word& r, Run& run) const {
    Element<C> cur = Element<C>::word(v);
    for (GenId g : r) {
      Element<C> next;
      for (const auto& [u, c] : cur.terms()) next += append(u, g, run).scaled(c);
      cur = std::move(next);
      if (cur.is_zero()) break;
    }
    return cur;
  }

  std::string name_;
  std::vector<Generator> gens_;
  std::unordered_map<std::string, GenId> index_;
  std::vector<RewriteRule<C>> rules_;
  std::vector<int> unary_;
  std::vector<int> binary_;
  std::vector<std::optional<GenId>> inverse_;
  std::set<std::pair<GenId, GenId>> free_pairs_;
  std::uint64_t budget_ = 0;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using Pres = Presentation<LaurentScalar>;

template <class C>
Element<C> normalize(const Element<C>& e, const Presentation<C>& p) {
  return p.normalize(e);
}

// e1*e2 - (-1)^{p1 p2} e2*e1, normalized.
template <class C>
Element<C> graded_commutator(const Element<C>& e1, const Element<C>& e2, const Presentation<C>& p) {
  if (e1.is_zero() || e2.is_zero()) return Element<C>();
  auto p1 = p.parity(e1), p2 = p.parity(e2);
  if (!p1 || !p2) throw InvalidInputError("graded_commutator needs parity-homogeneous arguments");
  Element<C> r = e1 * e2;
  if (*p1 * *p2) r += e2 * e1;
  else r -= e2 * e1;
  return p.normalize(r);
}

}  // namespace qdc
