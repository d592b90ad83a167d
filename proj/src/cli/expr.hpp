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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kernel/element.hpp"
#include "ring/laurent.hpp"

namespace qdc {

struct Expr;

struct Atom {
  enum class Kind { Name, Number, Q, Paren };
  Kind kind = Kind::Number;
  std::string name;
  Rational number;
  std::shared_ptr<Expr> sub;
  std::size_t line = 1, column = 1;  // not part of equality
};

struct Factor {
  Atom atom;
  std::optional<int> exponent;
};

struct Product {
  std::vector<Factor> factors;
};

struct Term {
  bool negative = false;
  Product product;
};

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := atom ['^' integer]
// atom := name | rational | 'q' | '(' expr ')'
struct Expr {
  std::vector<Term> terms;
};

bool operator==(const Atom& a, const Atom& b);
bool operator==(const Factor& a, const Factor& b);
bool operator==(const Product& a, const Product& b);
bool operator==(const Term& a, const Term& b);
bool operator==(const Expr& a, const Expr& b);

// line/column are added to positions reported by errors (for embedding in documents).
Expr parse_expr(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0);
std::string print_expr(const Expr& e);

// Resolves names and q during evaluation.
struct Resolver {
  std::function<std::optional<Elem>(const std::string&)> name;
  // Element for g^-1 when g names a generator with a formal inverse.
  std::function<std::optional<Elem>(const std::string&)> inverse;
  LaurentScalar q = LaurentScalar::q();
};

// Free-algebra value of the expression (not normalized).
Elem evaluate(const Expr& e, const Resolver& r);

}  // namespace qdc
