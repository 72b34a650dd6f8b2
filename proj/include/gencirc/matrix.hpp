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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gencirc/scalar.hpp"

namespace gencirc {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);
  static Matrix identity(std::size_t n, const FieldSpec& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values);
  Matrix transpose() const;
  /// Keeps the listed columns, in the listed order.
  Matrix select_columns(std::span<const std::size_t> columns) const;

  bool is_upper_triangular() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// Exact rank. Over Q rows are scaled to integers and reduced fraction-free (Bareiss);
/// over GF(p) plain elimination on machine residues.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form with zero rows removed. `pivots` receives pivot columns.
Matrix reduced_row_echelon(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

Scalar determinant(const Matrix& m);

/// nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace gencirc
