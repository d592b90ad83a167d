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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/expr.hpp"

namespace qdc {

// One line of a presentation document.
//
//   # comment
//   presentation <name>
//   include <name>
//   generator <name> even|odd [inverse-of <name>]
//   order <name> <name> ...
//   rule <g>[*<g>] -> <expr>
//   localized <g>[*<g>] -> <expr>
//   free <g> <h>
//   define <name> = <expr>
//   derivation <map> <g> -> <expr>
//   identity <id> <label> : <expr> = <expr>
struct Statement {
  enum class Kind { Blank, Comment, Presentation, Include, Generator, Order, Rule, Localized, Free, Define, Derivation, Identity };
  Kind kind = Kind::Blank;
  std::size_t line = 0;
  std::string text;   // comment body
  std::string name;   // presentation/include/generator/define/derivation map/identity id
  std::string label;  // identity label; derivation generator
  int parity = 0;
  std::optional<std::string> inverse_of;
  std::vector<std::string> names;  // order list, rule pattern, free pair
  Expr lhs;                        // identity lhs
  Expr rhs;                        // rule/define/derivation/identity rhs
};

struct Document {
  std::vector<Statement> statements;
  std::string name() const;
};

Document parse_document(std::string_view text);
std::string print_statement(const Statement& s);
std::string print_document(const Document& d);

}  // namespace qdc
