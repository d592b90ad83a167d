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

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cli/expr.hpp"
#include "kernel/presentation.hpp"
#include "ring/laurent.hpp"

namespace qdc::testing {

inline LaurentScalar random_scalar(std::mt19937& rng, int max_terms = 4, int span = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(-span, span), num(-9, 9), den(1, 5);
  LaurentScalar s;
  for (int i = nterms(rng); i > 0; --i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    s += LaurentScalar::monomial(c, exp(rng));
  }
  return s;
}

inline Rational random_rational(std::mt19937& rng, bool nonzero = true) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
  for (;;) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

inline Word random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), g(0, gens - 1);
  Word w(len(rng));
  for (auto& x : w) x = static_cast<GenId>(g(rng));
  return w;
}

// Random element whose words all have the given parity (or any parity when parity < 0).
inline Elem random_element(std::mt19937& rng, const Pres& p, std::size_t max_len, int terms = 4, int parity = -1) {
  Elem e;
  std::uniform_int_distribution<int> nt(1, terms);
  for (int i = nt(rng), guard = 0; i > 0 && guard < 1000; ++guard) {
    Word w = random_word(rng, p.size(), max_len);
    if (parity >= 0 && p.parity(w) != parity) continue;
    LaurentScalar c = random_scalar(rng, 2, 2);
    if (c.is_zero()) c = LaurentScalar(1);
    e.add(w, c);
    --i;
  }
  return e;
}

// Random expression AST in the grammar accepted by parse_expr. Numbers are
// nonnegative (signs live on terms) and canonical.
class AstGenerator {
 public:
  explicit AstGenerator(unsigned seed) : rng_(seed) {}

  Expr expr(int depth = 0) {
    Expr e;
    int n = pick(1, depth == 0 ? 4 : 3);
    for (int i = 0; i < n; ++i) {
      Term t;
      t.negative = pick(0, 1) == 1;
      int f = pick(1, 3);
      for (int j = 0; j < f; ++j) t.product.factors.push_back(factor(depth));
      e.terms.push_back(std::move(t));
    }
    return e;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Factor factor(int depth) {
    Factor f;
    f.atom = atom(depth);
    if (pick(0, 3) == 0) f.exponent = pick(-5, 5);
    return f;
  }

  Atom atom(int depth) {
    static const std::vector<std::string> names = {"a", "beta", "gamma", "d", "Da", "Dbeta", "x_1", "T2", "nabla_p", "qq"};
    Atom a;
    switch (pick(0, depth < 3 ? 3 : 2)) {
      case 0:
        a.kind = Atom::Kind::Name;
        a.name = names[static_cast<std::size_t>(pick(0, static_cast<int>(names.size()) - 1))];
        break;
      case 1: {
        a.kind = Atom::Kind::Number;
        a.number = Rational(pick(0, 40), pick(1, 9));
        a.number.canonicalize();
        break;
      }
      case 2:
        a.kind = Atom::Kind::Q;
        break;
      default:
        a.kind = Atom::Kind::Paren;
        a.sub = std::make_shared<Expr>(expr(depth + 1));
        break;
    }
    return a;
  }

  std::mt19937 rng_;
};

}  // namespace qdc::testing
