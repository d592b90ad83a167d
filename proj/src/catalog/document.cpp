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

#include "catalog/document.hpp"

#include <cctype>
#include <sstream>

#include "ring/errors.hpp"

namespace qdc {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  return true;
}

struct Line {
  std::string_view text;
  std::size_t number;

  [[noreturn]] void fail(const std::string& msg, std::size_t col = 1) const {
    throw ParseError("document error: " + msg, number, col);
  }
  std::size_t col_of(std::string_view sub) const { return static_cast<std::size_t>(sub.data() - text.data()) + 1; }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Expr expr_at(const Line& ln, std::string_view sub) {
  sub = trim(sub);
  if (sub.empty()) ln.fail("missing expression", ln.text.size() + 1);
  return parse_expr(sub, ln.number, ln.col_of(sub) - 1);
}

std::vector<std::string> pattern_names(const Line& ln, std::string_view sub) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : trim(sub)) {
    if (c == '*') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  names.push_back(cur);
  for (const auto& n : names)
    if (!is_ident(n)) ln.fail("bad rule pattern '" + std::string(trim(sub)) + "'", ln.col_of(sub));
  if (names.size() > 2) ln.fail("rule pattern longer than two letters", ln.col_of(sub));
  return names;
}

Statement parse_line(const Line& ln) {
  Statement s;
  s.line = ln.number;
  std::string_view t = trim(ln.text);
  if (t.empty()) return s;
  if (t.front() == '#') {
    s.kind = Statement::Kind::Comment;
    s.text = std::string(t);
    return s;
  }
  auto words = split_ws(t);
  const std::string kw(words[0]);
  auto arrow_split = [&](std::string_view body, const char* sep) -> std::pair<std::string_view, std::string_view> {
    auto p = body.find(sep);
    if (p == std::string_view::npos) ln.fail(std::string("expected '") + sep + "'", ln.col_of(body));
    return {body.substr(0, p), body.substr(p + std::string_view(sep).size())};
  };
  std::string_view rest = trim(t.substr(words[0].size()));
  if (kw == "presentation" || kw == "include") {
    if (words.size() != 2 || !is_ident(std::string(words[1]))) ln.fail("expected '" + kw + " <name>'");
    s.kind = kw == "presentation" ? Statement::Kind::Presentation : Statement::Kind::Include;
    s.name = std::string(words[1]);
  } else if (kw == "generator") {
    if (words.size() != 3 && words.size() != 5) ln.fail("expected 'generator <name> even|odd [inverse-of <name>]'");
    s.kind = Statement::Kind::Generator;
    s.name = std::string(words[1]);
    if (!is_ident(s.name)) ln.fail("bad generator name", ln.col_of(words[1]));
    if (words[2] == "even") s.parity = 0;
    else if (words[2] == "odd") s.parity = 1;
    else ln.fail("parity must be even or odd", ln.col_of(words[2]));
    if (words.size() == 5) {
      if (words[3] != "inverse-of") ln.fail("expected inverse-of", ln.col_of(words[3]));
      s.inverse_of = std::string(words[4]);
    }
  } else if (kw == "order") {
    s.kind = Statement::Kind::Order;
    for (std::size_t i = 1; i < words.size(); ++i) s.names.emplace_back(words[i]);
    if (s.names.empty()) ln.fail("empty order");
  } else if (kw == "free") {
    if (words.size() != 3) ln.fail("expected 'free <g> <h>'");
    s.kind = Statement::Kind::Free;
    s.names = {std::string(words[1]), std::string(words[2])};
  } else if (kw == "rule" || kw == "localized") {
    s.kind = kw == "rule" ? Statement::Kind::Rule : Statement::Kind::Localized;
    auto [lhs, rhs] = arrow_split(rest, "->");
    s.names = pattern_names(ln, lhs);
    s.rhs = expr_at(ln, rhs);
  } else if (kw == "define") {
    s.kind = Statement::Kind::Define;
    auto [lhs, rhs] = arrow_split(rest, "=");
    s.name = std::string(trim(lhs));
    if (!is_ident(s.name)) ln.fail("bad define name", ln.col_of(lhs));
    s.rhs = expr_at(ln, rhs);
  } else if (kw == "derivation") {
    s.kind = Statement::Kind::Derivation;
    auto [lhs, rhs] = arrow_split(rest, "->");
    auto hw = split_ws(lhs);
    if (hw.size() != 2) ln.fail("expected 'derivation <map> <generator> -> <expr>'");
    s.name = std::string(hw[0]);
    s.label = std::string(hw[1]);
    s.rhs = expr_at(ln, rhs);
  } else if (kw == "identity") {
    s.kind = Statement::Kind::Identity;
    auto [head, body] = arrow_split(rest, " : ");
    auto hw = split_ws(head);
    if (hw.size() != 2) ln.fail("expected 'identity <id> <label> : <lhs> = <rhs>'");
    s.name = std::string(hw[0]);
    s.label = std::string(hw[1]);
    auto [lhs, rhs] = arrow_split(body, "=");
    s.lhs = expr_at(ln, lhs);
    s.rhs = expr_at(ln, rhs);
  } else {
    ln.fail("unknown statement '" + kw + "'");
  }
  return s;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string Document::name() const {
  for (const auto& s : statements)
    if (s.kind == Statement::Kind::Presentation) return s.name;
  return {};
}

Document parse_document(std::string_view text) {
  Document d;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!(end == text.size() && line.empty())) d.statements.push_back(parse_line(Line{line, number}));
    start = end + 1;
    ++number;
  }
  if (d.name().empty()) throw ParseError("document error: missing 'presentation <name>'", 1, 1);
  return d;
}

std::string print_statement(const Statement& s) {
  using K = Statement::Kind;
  switch (s.kind) {
    case K::Blank:
      return "";
    case K::Comment:
      return s.text;
    case K::Presentation:
      return "presentation " + s.name;
    case K::Include:
      return "include " + s.name;
    case K::Generator:
      return "generator " + s.name + (s.parity ? " odd" : " even") + (s.inverse_of ? " inverse-of " + *s.inverse_of : "");
    case K::Order:
      return "order " + join(s.names, " ");
    case K::Rule:
      return "rule " + join(s.names, "*") + " -> " + print_expr(s.rhs);
    case K::Localized:
      return "localized " + join(s.names, "*") + " -> " + print_expr(s.rhs);
    case K::Free:
      return "free " + join(s.names, " ");
    case K::Define:
      return "define " + s.name + " = " + print_expr(s.rhs);
    case K::Derivation:
      return "derivation " + s.name + " " + s.label + " -> " + print_expr(s.rhs);
    case K::Identity:
      return "identity " + s.name + " " + s.label + " : " + print_expr(s.lhs) + " = " + print_expr(s.rhs);
  }
  return "";
}

std::string print_document(const Document& d) {
  std::string out;
  for (const auto& s : d.statements) out += print_statement(s) + "\n";
  return out;
}

}  // namespace qdc
