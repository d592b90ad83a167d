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

#include <string>
#include <vector>

#include "kernel/element.hpp"
#include "ring/laurent.hpp"

namespace qdc {

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += names.at(w[i]);
  }
  return s;
}

// Appends one term of a sum. Single-term coefficients carry their sign into
// the joiner; longer ones are parenthesized.
inline void format_term(std::string& out, const LaurentScalar& c, const std::string& word, bool first) {
  if (c.is_monomial()) {
    const bool neg = c.terms()[0].second < 0;
    LaurentScalar mag = neg ? -c : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (word.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += word;
    } else {
      out += mag.to_string() + "*" + word;
    }
    return;
  }
  if (!first) out += " + ";
  out += "(" + c.to_string() + ")";
  if (!word.empty()) out += "*" + word;
}

template <class C>
void format_term(std::string& out, const C& c, const std::string& word, bool first) {
  if (!first) out += " + ";
  out += "(" + c.to_string() + ")";
  if (!word.empty()) out += "*" + word;
}

// Canonical text: terms by descending term order.
template <class C>
std::string format_element(const Element<C>& e, const std::vector<std::string>& names) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    format_term(out, it->second, it->first.empty() ? std::string() : format_word(it->first, names), first);
    first = false;
  }
  return out;
}

}  // namespace qdc
