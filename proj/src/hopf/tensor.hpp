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

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "kernel/presentation.hpp"

namespace qdc {

// Element of the N-fold graded tensor power of a presentation.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Word, N>;

  Tensor() = default;
  static Tensor pure(const Key& k, const LaurentScalar& c = LaurentScalar(1)) {
    Tensor t;
    t.add(k, c);
    return t;
  }
  static Tensor one() { return pure(Key{}); }
  // e1 (x) e2 (x) ... as a pure tensor of elements.
  static Tensor product(const std::array<Elem, N>& slots) {
    Tensor t = one();
    for (std::size_t s = 0; s < N; ++s) {
      Tensor next;
      for (const auto& [k, c] : t.terms_)
        for (const auto& [w, cw] : slots[s].terms()) {
          Key nk = k;
          nk[s] = w;
          next.add(nk, c * cw);
        }
      t = std::move(next);
    }
    return t;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Key, LaurentScalar>& terms() const { return terms_; }

  void add(const Key& k, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor scaled(const LaurentScalar& s) const {
    Tensor r;
    for (const auto& [k, c] : terms_) r.add(k, c * s);
    return r;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

 private:
  std::map<Key, LaurentScalar> terms_;
};

using TensorElement = Tensor<2>;

// (A1 x ... x An)(B1 x ... x Bn) = sign * A1B1 x ... x AnBn, where Bj passes
// A(j+1) ... An.
template <std::size_t N>
Tensor<N> koszul_multiply(const Pres& p, const Tensor<N>& x, const Tensor<N>& y) {
  Tensor<N> r;
  for (const auto& [ka, ca] : x.terms()) {
    std::array<int, N> pa;
    for (std::size_t i = 0; i < N; ++i) pa[i] = p.parity(ka[i]);
    for (const auto& [kb, cb] : y.terms()) {
      int sign = 0;
      typename Tensor<N>::Key k;
      for (std::size_t j = 0; j < N; ++j) {
        int pb = p.parity(kb[j]);
        if (pb)
          for (std::size_t i = j + 1; i < N; ++i) sign ^= pa[i];
        k[j] = concat(ka[j], kb[j]);
      }
      LaurentScalar c = ca * cb;
      r.add(k, sign ? -c : c);
    }
  }
  return r;
}

// Each slot reduced independently.
template <std::size_t N>
Tensor<N> normalize(const Pres& p, const Tensor<N>& t) {
  Tensor<N> r;
  for (const auto& [k, c] : t.terms()) {
    std::array<Elem, N> slots;
    for (std::size_t i = 0; i < N; ++i) slots[i] = p.normalize_word(k[i]);
    r += Tensor<N>::product(slots).scaled(c);
  }
  return r;
}

template <std::size_t N>
std::string format_tensor(const Pres& p, const Tensor<N>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) mono += " (x) ";
      mono += k[i].empty() ? "1" : p.format_word(k[i]);
    }
    format_term(out, c, mono, first);
    first = false;
  }
  return out;
}

}  // namespace qdc
