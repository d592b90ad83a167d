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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ring/laurent.hpp"

namespace qdc {

// Unknown coefficients of the first order ansatz.
enum class Param : std::uint8_t { A, B, F11, F12, F21, F22 };
inline constexpr std::size_t kParamCount = 6;
const char* param_name(Param p);

// Polynomial in the ansatz parameters with Laurent coefficients.
class ParamPoly {
 public:
  using Exponents = std::array<std::uint8_t, kParamCount>;

  ParamPoly() = default;
  ParamPoly(long c) : ParamPoly(LaurentScalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit ParamPoly(const LaurentScalar& c);
  static ParamPoly var(Param p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  LaurentScalar constant_term() const;
  const std::map<Exponents, LaurentScalar>& terms() const { return terms_; }
  int degree() const;
  // Coefficient of p in a polynomial of degree <= 1.
  LaurentScalar linear_coefficient(Param p) const;
  bool mentions(Param p) const;
  // Every monomial is divisible by p.
  bool divisible_by(Param p) const;
  ParamPoly divide_by(Param p) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly substitute(const std::array<std::optional<ParamPoly>, kParamCount>& values) const;
  std::string to_string() const;

 private:
  void add(const Exponents& e, const LaurentScalar& c);
  std::map<Exponents, LaurentScalar> terms_;
};

}  // namespace qdc
