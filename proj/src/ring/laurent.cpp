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

#include "ring/laurent.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace qdc {

int checked_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent exponent overflow");
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

LaurentScalar::LaurentScalar(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentScalar::LaurentScalar(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentScalar LaurentScalar::monomial(const Rational& c, int exp) {
  LaurentScalar r;
  if (c != 0) r.terms_.emplace_back(exp, c);
  return r;
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int LaurentScalar::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of zero");
  return terms_.front().first;
}

int LaurentScalar::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of zero");
  return terms_.back().first;
}

Rational LaurentScalar::coefficient(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Rational(0);
}

Rational LaurentScalar::constant_value() const {
  if (!is_constant()) throw DomainError("scalar depends on q: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

void LaurentScalar::push(int exp, Rational c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.back().first == exp) {
    terms_.back().second += c;
    if (terms_.back().second == 0) terms_.pop_back();
    return;
  }
  terms_.emplace_back(exp, std::move(c));
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& m = a.terms_.size() == 1 ? a : b;
    const auto& p = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_)
      r.terms_.emplace_back(checked_add(t.first, m.terms_[0].first), t.second * m.terms_[0].second);
    return r;
  }
  std::vector<LaurentScalar::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(checked_add(x.first, y.first), x.second * y.second);
  std::stable_sort(prod.begin(), prod.end(),
                   [](const auto& s, const auto& t) { return s.first < t.first; });
  for (auto& t : prod) r.push(t.first, std::move(t.second));
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

LaurentScalar LaurentScalar::inverse() const {
  if (terms_.size() != 1) throw DomainError("not a unit in Q[q,q^-1]: " + to_string());
  if (terms_[0].first == std::numeric_limits<int>::min())
    throw std::overflow_error("Laurent exponent overflow");
  return monomial(Rational(1) / terms_[0].second, -terms_[0].first);
}

LaurentScalar LaurentScalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentScalar r(1);
  LaurentScalar base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

std::optional<LaurentScalar> LaurentScalar::divide_exact(const LaurentScalar& b) const {
  if (b.is_zero()) throw DomainError("division by zero scalar");
  if (is_zero()) return LaurentScalar();
  if (b.is_monomial()) return *this * b.inverse();
  const int bspan = b.max_exponent() - b.min_exponent();
  const Rational& blead = b.terms_.back().second;
  LaurentScalar rem = *this;
  LaurentScalar quo;
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < bspan) return std::nullopt;
    LaurentScalar t = monomial(rem.terms_.back().second / blead, rem.max_exponent() - b.max_exponent());
    quo += t;
    rem -= t * b;
  }
  return quo;
}

Rational LaurentScalar::eval(const Rational& q0) const {
  if (q0 == 0) throw DomainError("cannot evaluate at q = 0");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    Rational base = e < 0 ? Rational(1) / q0 : q0;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    acc += c * p;
  }
  acc.canonicalize();
  return acc;
}

std::size_t LaurentScalar::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [e, c] : terms_) {
    h = h * 1000003u ^ std::hash<int>()(e);
    h = h * 1000003u ^ std::hash<std::string>()(c.get_str());
  }
  return h;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentScalar scalar_add(const LaurentScalar& x, const LaurentScalar& y) { return x + y; }
LaurentScalar scalar_mul(const LaurentScalar& x, const LaurentScalar& y) { return x * y; }
Rational scalar_eval(const LaurentScalar& x, const Rational& q0) { return x.eval(q0); }

}  // namespace qdc
