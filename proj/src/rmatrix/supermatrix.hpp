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
#include <string>
#include <vector>

#include "kernel/presentation.hpp"

namespace qdc {

using Pres = Presentation<LaurentScalar>;

// Matrix of algebra elements with row and column index parities. Entry
// (i, j) of a homogeneous matrix has parity p(i) + p(j) + shift.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(std::vector<int> row_parity, std::vector<int> col_parity);

  static SuperMatrix identity(const std::vector<int>& parity);
  static SuperMatrix constant(const std::vector<std::vector<LaurentScalar>>& rows, const std::vector<int>& parity);

  std::size_t rows() const { return row_parity_.size(); }
  std::size_t cols() const { return col_parity_.size(); }
  const std::vector<int>& row_parity() const { return row_parity_; }
  const std::vector<int>& col_parity() const { return col_parity_; }
  Elem& at(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }
  const Elem& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  SuperMatrix scaled(const LaurentScalar& s) const;
  // Ordered (noncommutative) product, unreduced.
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.entries_ == b.entries_; }

  bool is_zero() const;
  SuperMatrix normalized(const Pres& p) const;
  // Entry (i, j) times (-1)^(p(i) + p(j) + shift).
  SuperMatrix parity_signed(int shift) const;
  // Throws unless every entry is homogeneous of parity p(i) + p(j) + shift.
  void check_homogeneous(const Pres& p, int shift, const std::string& what) const;
  // Row-major canonical entry texts.
  std::vector<std::string> format(const Pres& p) const;

 private:
  std::vector<int> row_parity_, col_parity_;
  std::vector<Elem> entries_;
};

// K[(i,j),(k,l)] = (-1)^((p(i) + p(k)) p(j)) M_ik N_jl, composite parity p(i) + p(j).
SuperMatrix graded_kron(const SuperMatrix& m, const SuperMatrix& n);
// Same without signs.
SuperMatrix plain_kron(const SuperMatrix& m, const SuperMatrix& n);

// Basis parities of the superplane: first coordinate even, second odd.
const std::vector<int>& plane_parity();

// 2x2 matrix of generators, row-major names.
SuperMatrix generator_matrix(const Pres& p, const std::vector<std::string>& names);

}  // namespace qdc
