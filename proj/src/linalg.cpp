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

#include "gencirc/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gencirc {

GradedMatrix::GradedMatrix(RingPtr ring, std::uint32_t degree, const Matrix& rows)
    : ring_(std::move(ring)),
      degree_(degree),
      basis_(monomials_of_degree(ring_->nvars(), degree)),
      rows_(0, basis_.size(), ring_->field()) {
  if (rows.cols() != basis_.size()) throw std::invalid_argument("row length differs from dim A_d");
  if (!(rows.field() == ring_->field())) throw std::invalid_argument("matrix over the wrong field");
  for (std::size_t i = 0; i < basis_.size(); ++i) column_index_.emplace(basis_[i], i);
  rows_ = reduced_row_echelon(rows, &pivots_);
}

GradedMatrix GradedMatrix::span_of(RingPtr ring, std::uint32_t degree, std::span<const Polynomial> polys) {
  GradedMatrix empty = zero(ring, degree);
  Matrix m(0, empty.columns(), ring->field());
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    m.append_row(empty.coordinates(p));
  }
  return GradedMatrix(std::move(ring), degree, m);
}

GradedMatrix GradedMatrix::zero(RingPtr ring, std::uint32_t degree) {
  auto cols = monomials_of_degree(ring->nvars(), degree).size();
  Matrix m(0, cols, ring->field());
  return GradedMatrix(std::move(ring), degree, m);
}

GradedMatrix GradedMatrix::full(RingPtr ring, std::uint32_t degree) {
  auto cols = monomials_of_degree(ring->nvars(), degree).size();
  return GradedMatrix(ring, degree, Matrix::identity(cols, ring->field()));
}

std::optional<std::size_t> GradedMatrix::column_of(const Monomial& m) const {
  auto it = column_index_.find(m);
  if (it == column_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Scalar> GradedMatrix::coordinates(const Polynomial& f) const {
  if (!(*f.ring() == *ring_)) throw std::invalid_argument("polynomial from another ring");
  std::vector<Scalar> v(basis_.size(), Scalar::zero(ring_->field()));
  for (const auto& t : f.terms()) {
    auto c = column_of(t.monomial);
    if (!c) throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(degree_));
    v[*c] = t.coefficient;
  }
  return v;
}

std::vector<Polynomial> GradedMatrix::row_polynomials() const {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < basis_.size(); ++c)
      if (!rows_.at(r, c).is_zero()) terms.push_back(Term{basis_[c], rows_.at(r, c)});
    out.push_back(Polynomial::from_terms(ring_, std::move(terms)));
  }
  return out;
}

bool GradedMatrix::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  Matrix m = rows_;
  m.append_row(coordinates(f));
  return rank(m) == dim();
}

GradedMatrix graded_basis(const RingPtr& ring, std::span<const Polynomial> generators, std::uint32_t degree) {
  GradedMatrix empty = GradedMatrix::zero(ring, degree);
  Matrix m(0, empty.columns(), ring->field());
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("graded_basis needs homogeneous generators");
    if (g.degree() > degree) continue;
    for (const auto& mono : monomials_of_degree(ring->nvars(), degree - g.degree())) {
      m.append_row(empty.coordinates(g.times_term(mono, Scalar::one(ring->field()))));
    }
  }
  return GradedMatrix(ring, degree, m);
}

std::size_t rank_rel(const GradedMatrix& w, std::span<const Monomial> s, RankMode mode) {
  std::set<Monomial> distinct;
  Matrix stacked = w.rows();
  const auto& field = w.ring()->field();
  for (const auto& m : s) {
    auto c = w.column_of(m);
    if (!c) throw std::invalid_argument("monomial of the wrong degree in rank_rel");
    if (!distinct.insert(m).second) throw std::invalid_argument("repeated monomial in rank_rel");
    std::vector<Scalar> unit(w.columns(), Scalar::zero(field));
    unit[*c] = Scalar::one(field);
    stacked.append_row(unit);
  }
  const std::size_t total = rank(stacked);
  return mode == RankMode::sub ? total - w.dim() : total - s.size();
}

GradedMatrix initial_space_w(const GradedMatrix& w, const Weight& weight, const MonomialOrder& tie) {
  const auto order = MonomialOrder::weighted(weight, tie);
  std::vector<std::size_t> perm(w.columns());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return order.greater(w.basis()[a], w.basis()[b]); });
  std::vector<std::size_t> pivots;
  Matrix echelon = reduced_row_echelon(w.rows().select_columns(perm), &pivots);
  std::vector<Polynomial> forms;
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    const long top = weight_value(w.basis()[perm[pivots[r]]], weight);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const auto& m = w.basis()[perm[k]];
      if (!echelon.at(r, k).is_zero() && weight_value(m, weight) == top) terms.push_back(Term{m, echelon.at(r, k)});
    }
    forms.push_back(Polynomial::from_terms(w.ring(), std::move(terms)));
  }
  return GradedMatrix::span_of(w.ring(), w.degree(), forms);
}

GradedMatrix transform(const Substitution& s, const GradedMatrix& w) {
  std::vector<Polynomial> images;
  for (const auto& p : w.row_polynomials()) images.push_back(s.apply(p));
  return GradedMatrix::span_of(w.ring(), w.degree(), images);
}

}  // namespace gencirc
