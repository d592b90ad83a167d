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

#include "rmatrix/supermatrix.hpp"

#include "ring/errors.hpp"

namespace qdc {

SuperMatrix::SuperMatrix(std::vector<int> row_parity, std::vector<int> col_parity)
    : row_parity_(std::move(row_parity)), col_parity_(std::move(col_parity)), entries_(rows() * cols()) {}

SuperMatrix SuperMatrix::identity(const std::vector<int>& parity) {
  SuperMatrix m(parity, parity);
  for (std::size_t i = 0; i < parity.size(); ++i) m.at(i, i) = Elem::one();
  return m;
}

SuperMatrix SuperMatrix::constant(const std::vector<std::vector<LaurentScalar>>& rows, const std::vector<int>& parity) {
  SuperMatrix m(parity, parity);
  if (rows.size() != parity.size()) throw InvalidInputError("constant matrix has the wrong number of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != parity.size()) throw InvalidInputError("constant matrix row has the wrong length");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Elem(rows[i][j]);
  }
  return m;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  if (rows() != o.rows() || cols() != o.cols()) throw InvalidInputError("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  if (rows() != o.rows() || cols() != o.cols()) throw InvalidInputError("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

SuperMatrix SuperMatrix::scaled(const LaurentScalar& s) const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = e.scaled(s);
  return r;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInputError("matrix dimension mismatch");
  SuperMatrix r(a.row_parity_, b.col_parity_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem& e = r.at(i, j);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Elem& x = a.at(i, k);
        const Elem& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) e += x * y;
      }
    }
  return r;
}

bool SuperMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

SuperMatrix SuperMatrix::normalized(const Pres& p) const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = p.normalize(e);
  return r;
}

SuperMatrix SuperMatrix::parity_signed(int shift) const {
  SuperMatrix r = *this;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if ((row_parity_[i] + col_parity_[j] + shift) % 2) r.at(i, j) = -r.at(i, j);
  return r;
}

void SuperMatrix::check_homogeneous(const Pres& p, int shift, const std::string& what) const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Elem& e = at(i, j);
      if (e.is_zero()) continue;
      auto par = p.parity(e);
      if (!par || *par != (row_parity_[i] + col_parity_[j] + shift) % 2)
        throw InvalidInputError(what + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") has the wrong parity");
    }
}

std::vector<std::string> SuperMatrix::format(const Pres& p) const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(p.format(e));
  return out;
}

namespace {

SuperMatrix kron(const SuperMatrix& m, const SuperMatrix& n, bool graded) {
  std::vector<int> rp, cp;
  for (int a : m.row_parity())
    for (int b : n.row_parity()) rp.push_back((a + b) % 2);
  for (int a : m.col_parity())
    for (int b : n.col_parity()) cp.push_back((a + b) % 2);
  SuperMatrix r(rp, cp);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n.rows(); ++j)
      for (std::size_t k = 0; k < m.cols(); ++k)
        for (std::size_t l = 0; l < n.cols(); ++l) {
          const Elem& x = m.at(i, k);
          const Elem& y = n.at(j, l);
          if (x.is_zero() || y.is_zero()) continue;
          Elem e = x * y;
          if (graded && (m.row_parity()[i] + m.col_parity()[k]) % 2 && n.row_parity()[j]) e = -e;
          r.at(i * n.rows() + j, k * n.cols() + l) = e;
        }
  return r;
}

}  // namespace

SuperMatrix graded_kron(const SuperMatrix& m, const SuperMatrix& n) { return kron(m, n, true); }
SuperMatrix plain_kron(const SuperMatrix& m, const SuperMatrix& n) { return kron(m, n, false); }

const std::vector<int>& plane_parity() {
  static const std::vector<int> p{0, 1};
  return p;
}

SuperMatrix generator_matrix(const Pres& p, const std::vector<std::string>& names) {
  if (names.size() != 4) throw InvalidInputError("generator matrix needs four names");
  SuperMatrix m(plane_parity(), plane_parity());
  for (std::size_t i = 0; i < 4; ++i) m.at(i / 2, i % 2) = p.gen(names[i]);
  return m;
}

}  // namespace qdc
