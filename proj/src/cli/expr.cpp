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

#include "cli/expr.hpp"

#include <cctype>
#include <limits>

#include "ring/errors.hpp"

namespace qdc {

bool operator==(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Atom::Kind::Name:
      return a.name == b.name;
    case Atom::Kind::Number:
      return a.number == b.number;
    case Atom::Kind::Q:
      return true;
    case Atom::Kind::Paren:
      return a.sub && b.sub && *a.sub == *b.sub;
  }
  return false;
}
bool operator==(const Factor& a, const Factor& b) { return a.atom == b.atom && a.exponent == b.exponent; }
bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }
bool operator==(const Term& a, const Term& b) { return a.negative == b.negative && a.product == b.product; }
bool operator==(const Expr& a, const Expr& b) { return a.terms == b.terms; }

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::size_t line, std::size_t col0) : s_(s), line0_(line), col0_(col0) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, i_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = line0_, col = col0_ + 1;
    for (std::size_t k = 0; k < at && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("syntax error: " + msg, line, col);
  }
  void position(Atom& a, std::size_t at) const {
    std::size_t line = line0_, col = col0_ + 1;
    for (std::size_t k = 0; k < at; ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    a.line = line;
    a.column = col;
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  Expr expr() {
    Expr e;
    bool neg = false;
    if (peek('-') || peek('+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    e.terms.push_back({neg, product()});
    while (peek('+') || peek('-')) {
      neg = s_[i_] == '-';
      ++i_;
      e.terms.push_back({neg, product()});
    }
    return e;
  }

  Product product() {
    Product p;
    p.factors.push_back(factor());
    while (peek('*')) {
      ++i_;
      p.factors.push_back(factor());
    }
    return p;
  }

  Factor factor() {
    Factor f;
    f.atom = atom();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t start = i_;
      bool neg = false;
      if (i_ < s_.size() && s_[i_] == '-') {
        neg = true;
        ++i_;
      }
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer exponent");
      long long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = v * 10 + (s_[i_++] - '0');
        if (v > std::numeric_limits<int>::max()) fail_at("exponent out of range", start);
      }
      f.exponent = static_cast<int>(neg ? -v : v);
    }
    return f;
  }

  std::string digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
    return d;
  }

  Atom atom() {
    skip();
    Atom a;
    position(a, i_);
    if (i_ >= s_.size()) fail("unexpected end of input, expected a factor");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      a.kind = Atom::Kind::Paren;
      a.sub = std::make_shared<Expr>(expr());
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      std::string num = digits();
      std::string den = "1";
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      mpz_class n(num), d(den);
      if (d == 0) fail_at("zero denominator", start);
      a.kind = Atom::Kind::Number;
      a.number = Rational(n, d);
      a.number.canonicalize();
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) name += s_[i_++];
      if (name == "q") {
        a.kind = Atom::Kind::Q;
      } else {
        a.kind = Atom::Kind::Name;
        a.name = std::move(name);
      }
      return a;
    }
    fail("unexpected '" + std::string(1, c) + "', expected a factor");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line0_, col0_;
};

void print_into(std::string& out, const Expr& e);

void print_atom(std::string& out, const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Name:
      out += a.name;
      break;
    case Atom::Kind::Number:
      out += a.number.get_str();
      break;
    case Atom::Kind::Q:
      out += "q";
      break;
    case Atom::Kind::Paren:
      out += "(";
      print_into(out, *a.sub);
      out += ")";
      break;
  }
}

void print_into(std::string& out, const Expr& e) {
  for (std::size_t t = 0; t < e.terms.size(); ++t) {
    const Term& term = e.terms[t];
    if (t == 0) {
      if (term.negative) out += "-";
    } else {
      out += term.negative ? " - " : " + ";
    }
    for (std::size_t f = 0; f < term.product.factors.size(); ++f) {
      if (f) out += "*";
      const Factor& fac = term.product.factors[f];
      print_atom(out, fac.atom);
      if (fac.exponent) out += "^" + std::to_string(*fac.exponent);
    }
  }
}

std::string where(const Atom& a) {
  return " at line " + std::to_string(a.line) + ", column " + std::to_string(a.column);
}

Elem eval_factor(const Factor& f, const Resolver& r);

Elem eval_atom(const Atom& a, const Resolver& r) {
  switch (a.kind) {
    case Atom::Kind::Number:
      return Elem(LaurentScalar(a.number));
    case Atom::Kind::Q:
      return Elem(r.q);
    case Atom::Kind::Paren:
      return evaluate(*a.sub, r);
    case Atom::Kind::Name: {
      auto v = r.name ? r.name(a.name) : std::nullopt;
      if (!v) throw UnknownNameError("unknown name '" + a.name + "'" + where(a));
      return *v;
    }
  }
  return Elem();
}

bool is_scalar(const Elem& e) { return e.terms().size() == 1 && e.terms().begin()->first.empty(); }

Elem eval_factor(const Factor& f, const Resolver& r) {
  int n = f.exponent.value_or(1);
  Elem base;
  if (n < 0) {
    if (f.atom.kind == Atom::Kind::Name) {
      auto inv = r.inverse ? r.inverse(f.atom.name) : std::nullopt;
      if (!inv) throw DomainError("'" + f.atom.name + "' has no inverse" + where(f.atom));
      base = *inv;
    } else {
      Elem v = eval_atom(f.atom, r);
      if (!is_scalar(v) || !v.terms().begin()->second.is_monomial())
        throw DomainError("negative power of a non-invertible expression" + where(f.atom));
      base = Elem(v.terms().begin()->second.inverse());
    }
    n = -n;
  } else {
    base = eval_atom(f.atom, r);
  }
  if (is_scalar(base)) return Elem(base.terms().begin()->second.pow(n));
  Elem acc = Elem::one();
  for (int k = 0; k < n; ++k) acc = acc * base;
  return acc;
}

}  // namespace

Expr parse_expr(std::string_view text, std::size_t line, std::size_t column_offset) {
  return Parser(text, line, column_offset).parse();
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(out, e);
  return out;
}

Elem evaluate(const Expr& e, const Resolver& r) {
  Elem total;
  for (const Term& t : e.terms) {
    Elem prod = Elem::one();
    for (const Factor& f : t.product.factors) {
      prod = prod * eval_factor(f, r);
      if (prod.is_zero()) break;
    }
    if (t.negative) total -= prod;
    else total += prod;
  }
  return total;
}

}  // namespace qdc
