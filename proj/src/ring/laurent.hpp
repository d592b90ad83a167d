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

#include <gmpxx.h>

#include "ring/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdc {

using Rational = mpq_class;

// Element of Q[q, q^-1]. Terms are kept sorted by ascending exponent with
// no zero coefficient, so structural equality is ring equality.
class LaurentScalar {
 public:
  using Term = std::pair<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentScalar(const Rational& c);

  static LaurentScalar monomial(const Rational& c, int exp);
  static LaurentScalar q(int exp = 1) { return monomial(Rational(1), exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coefficient(int exp) const;
  Rational constant_value() const;  // requires is_constant()

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

  LaurentScalar pow(int n) const;  // negative n only for monomials
  LaurentScalar inverse() const;   // monomials only
  // a = b * r with r Laurent; nullopt if b does not divide a.
  std::optional<LaurentScalar> divide_exact(const LaurentScalar& b) const;
  Rational eval(const Rational& q0) const;
  std::size_t hash() const;

  // "q^2 - 2 + q^-2", descending exponent.
  std::string to_string() const;

 private:
  void push(int exp, Rational c);
  std::vector<Term> terms_;
};

LaurentScalar scalar_add(const LaurentScalar& x, const LaurentScalar& y);
LaurentScalar scalar_mul(const LaurentScalar& x, const LaurentScalar& y);
Rational scalar_eval(const LaurentScalar& x, const Rational& q0);

int checked_add(int a, int b);
std::string rational_to_string(const Rational& r);

}  // namespace qdc
