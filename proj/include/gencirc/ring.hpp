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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencirc/matrix.hpp"
#include "gencirc/scalar.hpp"

namespace gencirc {

/// Exponent vector with cached total degree. Equality and ordering are structural
/// (lexicographic on exponents); monomial orders live in order.hpp.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  std::uint32_t degree() const noexcept { return degree_; }

  bool divides(const Monomial& other) const;
  /// this / divisor; throws std::invalid_argument unless divisor divides this.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

/// Degree first, then reverse lexicographic: the canonical term order used for storage,
/// printing and graded-matrix columns.
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b);

/// All monomials of total degree d in n variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// K[x_1..x_n] with named variables.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, FieldSpec field);
  static RingPtr make(std::vector<std::string> names, FieldSpec field = FieldSpec::rationals());

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same ring with one more variable appended (named `preferred`, primed until unique).
  RingPtr with_variable_appended(const std::string& preferred) const;
  /// Same variables over another field.
  RingPtr over(const FieldSpec& field) const;

  std::string monomial_to_string(const Monomial& m) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  FieldSpec field_;
};

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial in canonical form: no zero coefficients, terms in descending
/// degrevlex order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, Scalar c);
  /// Text grammar: `x^2*y - 3/2*z^3`. Throws ParseError.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::vector<Monomial> support() const;
  Scalar coefficient(const Monomial& m) const;
  bool is_homogeneous() const;
  /// Largest total degree of a term; throws on the zero polynomial.
  std::uint32_t degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  Polynomial times_term(const Monomial& m, const Scalar& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Integer weight vector.
class Weight {
 public:
  explicit Weight(std::vector<long> entries);
  /// Clears denominators by their lcm; the induced partial order on monomials is unchanged.
  static Weight from_rationals(std::span<const mpq_class> entries);
  /// Comma-separated integers or fractions: "2,1,0", "1/2,1".
  static Weight parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long>& entries() const noexcept { return entries_; }
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<long> entries_;
};

/// w . a
long weight_value(const Monomial& m, const Weight& w);

/// Sum of the terms of maximal weight. Throws std::invalid_argument on zero input.
Polynomial initial_form_w(const Polynomial& f, const Weight& w);

/// t^{max w.a} f(t^{-w_1} x_1, ..., t^{-w_n} x_n) in `target`, which must be f's ring with
/// one extra trailing variable; defaults to appending `t`.
Polynomial homogenize_w(const Polynomial& f, const Weight& w, RingPtr target = nullptr);

/// Substitutes a value for one variable; the result lives in `target` (f's ring minus that
/// variable).
Polynomial specialize_variable(const Polynomial& f, std::size_t index, const Scalar& value,
                               const RingPtr& target);

/// Invertible linear change of variables.
///   row action:    x_i -> sum_j m_ij x_j
///   column action: x_j -> sum_i m_ij x_i
class Substitution {
 public:
  enum class Action { row, column };

  /// Throws std::invalid_argument if the matrix is singular or mis-sized.
  Substitution(RingPtr ring, Matrix matrix, Action action);

  /// x_i -> a^{-w_i} x_i
  static Substitution diagonal_scaling(RingPtr ring, const Weight& w, const Scalar& a);
  /// Relabels: new variable k is old variable perm[k], i.e. x_{perm[k]} -> x_k.
  static Substitution relabeling(RingPtr ring, std::span<const std::size_t> perm);

  const RingPtr& ring() const noexcept { return ring_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Action action() const noexcept { return action_; }

  Substitution inverse() const;
  Polynomial image_of_variable(std::size_t index) const;
  Polynomial apply(const Polynomial& f) const;

 private:
  RingPtr ring_;
  Matrix matrix_;
  Action action_;
};

inline Polynomial apply_substitution(const Substitution& s, const Polynomial& f) { return s.apply(f); }

}  // namespace gencirc
