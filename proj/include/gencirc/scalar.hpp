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
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace gencirc {

/// Coefficient field: exact rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless `p` is prime and fits in 31 bits.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "QQ", "GF(p)", "gf:p".
  static FieldSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint32_t modulus_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// An element of a FieldSpec. Rationals are kept in canonical form (gcd 1, positive
/// denominator) by GMP; prime-field elements as residues in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  Scalar(long value, const FieldSpec& field);
  Scalar(const mpq_class& value, const FieldSpec& field);

  static Scalar zero(const FieldSpec& field) { return Scalar(0L, field); }
  static Scalar one(const FieldSpec& field) { return Scalar(1L, field); }

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; for prime fields the residue in [0, p).
  mpq_class to_rational() const;
  std::uint32_t residue() const noexcept { return residue_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-3/2"; prime-field residues print as non-negative integers.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  mpq_class value_;
  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 0;  // 0 means rationals
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gencirc
