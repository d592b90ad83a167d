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
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ring/laurent.hpp"

namespace qdc {

using GenId = std::uint16_t;
using Word = std::vector<GenId>;

// Degree-lexicographic order over generator order indices.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (GenId g : w) h = (h ^ g) * 1099511628211ull;
    return h ^ w.size();
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Finite linear combination of words with coefficients in C.
template <class C>
class Element {
 public:
  using Map = std::map<Word, C, DegLex>;

  Element() = default;
  explicit Element(const C& c) {
    if (!is_zero_coeff(c)) terms_.emplace(Word{}, c);
  }
  static Element word(Word w, C c = C(1)) {
    Element e;
    e.add(std::move(w), std::move(c));
    return e;
  }
  static Element one() { return Element(C(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }

  void add(const Word& w, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }
  void add(Word&& w, C&& c) {
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  Element operator-() const {
    Element r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const C& s, const Element& e) { return e.scaled(s); }
  friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  Element scaled(const C& s) const {
    Element r;
    if (is_zero_coeff(s)) return r;
    for (const auto& [w, c] : terms_) {
      C p = c * s;
      if (!is_zero_coeff(p)) r.terms_.emplace_hint(r.terms_.end(), w, std::move(p));
    }
    return r;
  }

  // Bilinear concatenation, unreduced.
  friend Element multiply(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(concat(wa, wb), ca * cb);
    return r;
  }

  std::size_t max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Element<D> r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

 private:
  static bool is_zero_coeff(const C& c) { return c.is_zero(); }
  Map terms_;
};

using Elem = Element<LaurentScalar>;

// Algebra map from the free algebra: each generator g goes to images[g].
template <class C>
Element<C> substitute(const Element<C>& e, const std::vector<Element<C>>& images) {
  Element<C> out;
  for (const auto& [w, c] : e.terms()) {
    Element<C> t(c);
    for (GenId g : w) t = t * images.at(g);
    out += t;
  }
  return out;
}

}  // namespace qdc
