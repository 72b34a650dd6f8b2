// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gencirc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gencirc {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix s(rows_, columns.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < columns.size(); ++k) s.at(r, k) = at(r, columns[k]);
  return s;
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < r && c < cols_; ++c)
      if (!at(r, c).is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix p(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return p;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

namespace {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t k = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = a[k][col] * a[i][j] - a[i][col] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[k][col];
    ++k;
  }
  return k;
}

std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> a, std::size_t cols, std::uint64_t p) {
  const std::size_t rows = a.size();
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t piv = k;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[k]);
    // inverse via Fermat
    std::uint64_t inv = 1, base = a[k][col], e = p - 2;
    while (e) {
      if (e & 1U) inv = inv * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t factor = a[i][col] * inv % p;
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = (a[i][j] + (p - factor) * a[k][j]) % p;
      }
    }
    ++k;
  }
  return k;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime()) {
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).residue();
    return modular_rank(std::move(a), m.cols(), m.field().modulus());
  }
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).to_rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class v = m.at(r, c).to_rational() * scale;
      a[r][c] = v.get_num();
    }
  }
  return bareiss_rank(std::move(a), m.cols());
}

Matrix reduced_row_echelon(const Matrix& m, std::vector<std::size_t>* pivots) {
  std::vector<std::vector<Scalar>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
  std::vector<std::size_t> piv;
  std::size_t k = 0;
  for (std::size_t col = 0; col < m.cols() && k < a.size(); ++col) {
    std::size_t p = k;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[k]);
    Scalar inv = a[k][col].inverse();
    for (std::size_t j = col; j < m.cols(); ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == k || a[i][col].is_zero()) continue;
      Scalar factor = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!a[k][j].is_zero()) a[i][j] -= factor * a[k][j];
      }
    }
    piv.push_back(col);
    ++k;
  }
  Matrix out(0, m.cols(), m.field());
  for (std::size_t r = 0; r < k; ++r) out.append_row(a[r]);
  if (pivots) *pivots = std::move(piv);
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Scalar>> a(n);
  for (std::size_t r = 0; r < n; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Scalar inv = a[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Scalar factor = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  std::vector<std::size_t> pivots;
  Matrix red = reduced_row_echelon(aug, &pivots);
  if (red.rows() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

}  // namespace gencirc
