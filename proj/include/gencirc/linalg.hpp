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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gencirc/matrix.hpp"
#include "gencirc/order.hpp"
#include "gencirc/ring.hpp"

namespace gencirc {

/// A subspace W of A_d, stored as the reduced row echelon form of its coordinate
/// matrix over the degree-d monomials in descending degrevlex order.
class GradedMatrix {
 public:
  /// `rows` are coordinate vectors (any spanning set); they are echelonized here.
  GradedMatrix(RingPtr ring, std::uint32_t degree, const Matrix& rows);
  /// Span of homogeneous degree-d polynomials.
  static GradedMatrix span_of(RingPtr ring, std::uint32_t degree, std::span<const Polynomial> polys);
  static GradedMatrix zero(RingPtr ring, std::uint32_t degree);
  static GradedMatrix full(RingPtr ring, std::uint32_t degree);

  const RingPtr& ring() const noexcept { return ring_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const Matrix& rows() const noexcept { return rows_; }
  std::size_t dim() const noexcept { return rows_.rows(); }
  std::size_t columns() const noexcept { return basis_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  std::optional<std::size_t> column_of(const Monomial& m) const;
  /// Coordinates of a degree-d polynomial; throws on wrong degree or ring.
  std::vector<Scalar> coordinates(const Polynomial& f) const;
  std::vector<Polynomial> row_polynomials() const;
  bool contains(const Polynomial& f) const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.degree_ == b.degree_ && *a.ring_ == *b.ring_ && a.rows_ == b.rows_;
  }

 private:
  RingPtr ring_;
  std::uint32_t degree_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> column_index_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of I_d for the ideal generated by homogeneous `generators`: all monomial
/// multiples landing in degree d, echelonized.
GradedMatrix graded_basis(const RingPtr& ring, std::span<const Polynomial> generators, std::uint32_t degree);

enum class RankMode {
  sub,  ///< rk_S W = dim (W + <S>) / W
  sup,  ///< rk^S W = dim (W + <S>) / <S>
};

/// Relative ranks. S must consist of distinct degree-d monomials.
std::size_t rank_rel(const GradedMatrix& w, std::span<const Monomial> s, RankMode mode);

/// in_w(W), computed from an echelon basis in the column order of "<_w" with `tie`.
GradedMatrix initial_space_w(const GradedMatrix& w, const Weight& weight, const MonomialOrder& tie);

/// Image of W under a linear change of variables.
GradedMatrix transform(const Substitution& s, const GradedMatrix& w);

}  // namespace gencirc
