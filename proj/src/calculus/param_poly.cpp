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

#include "calculus/param_poly.hpp"

#include "kernel/format.hpp"
#include "ring/errors.hpp"

namespace qdc {

const char* param_name(Param p) {
  static const char* names[] = {"A", "B", "F11", "F12", "F21", "F22"};
  return names[static_cast<int>(p)];
}

ParamPoly::ParamPoly(const LaurentScalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly ParamPoly::var(Param p) {
  ParamPoly r;
  Exponents e{};
  e[static_cast<int>(p)] = 1;
  r.terms_.emplace(e, LaurentScalar(1));
  return r;
}

bool ParamPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

LaurentScalar ParamPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? LaurentScalar() : it->second;
}

int ParamPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

LaurentScalar ParamPoly::linear_coefficient(Param p) const {
  Exponents e{};
  e[static_cast<int>(p)] = 1;
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

bool ParamPoly::mentions(Param p) const {
  for (const auto& [e, c] : terms_)
    if (e[static_cast<int>(p)]) return true;
  return false;
}

bool ParamPoly::divisible_by(Param p) const {
  if (terms_.empty()) return false;
  for (const auto& [e, c] : terms_)
    if (!e[static_cast<int>(p)]) return false;
  return true;
}

ParamPoly ParamPoly::divide_by(Param p) const {
  if (!divisible_by(p)) throw DomainError(std::string("polynomial is not divisible by ") + param_name(p));
  ParamPoly r;
  for (const auto& [e0, c] : terms_) {
    Exponents e = e0;
    --e[static_cast<int>(p)];
    r.terms_.emplace(e, c);
  }
  return r;
}

void ParamPoly::add(const Exponents& e, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ParamPoly::Exponents e;
      for (std::size_t i = 0; i < kParamCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add(e, ca * cb);
    }
  return r;
}

ParamPoly ParamPoly::substitute(const std::array<std::optional<ParamPoly>, kParamCount>& values) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    ParamPoly t{c};
    for (std::size_t i = 0; i < kParamCount; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * (values[i] ? *values[i] : var(static_cast<Param>(i)));
    r += t;
  }
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Higher total degree first, then by parameter order.
  std::vector<std::pair<Exponents, LaurentScalar>> sorted(terms_.rbegin(), terms_.rend());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (auto v : x.first) dx += v;
    for (auto v : y.first) dy += v;
    return dx > dy;
  });
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < kParamCount; ++i)
      for (int k = 0; k < e[i]; ++k) mono += (mono.empty() ? "" : "*") + std::string(param_name(static_cast<Param>(i)));
    format_term(out, c, mono, first);
    first = false;
  }
  return out;
}

}  // namespace qdc
