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

#include "gencirc/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "gencirc/errors.hpp"

namespace gencirc {

namespace {

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime_number(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(static_cast<char>(std::toupper(c)));
  }
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("GF(", 0) == 0 && text.size() > 4 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else if (text.rfind("GF:", 0) == 0) {
    digits = text.substr(3);
  } else {
    throw ParseError("unknown field '" + raw + "' (expected Q, GF(p) or gf:p)");
  }
  if (digits.empty() || digits.size() > 10 ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad field modulus in '" + raw + "'");
  }
  try {
    return prime(std::stoull(digits));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::rationals ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar(long value, const FieldSpec& field) : modulus_(field.modulus()) {
  if (modulus_ == 0) {
    value_ = value;
  } else {
    long r = value % static_cast<long>(modulus_);
    if (r < 0) r += modulus_;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(const mpq_class& value, const FieldSpec& field) : modulus_(field.modulus()) {
  if (modulus_ == 0) {
    value_ = value;
    value_.canonicalize();
    return;
  }
  std::uint32_t den = reduce(value.get_den(), modulus_);
  if (den == 0) throw std::domain_error("denominator vanishes in " + field.to_string());
  std::uint64_t num = reduce(value.get_num(), modulus_);
  residue_ = static_cast<std::uint32_t>(num * mod_pow(den, modulus_ - 2, modulus_) % modulus_);
}

FieldSpec Scalar::field() const {
  return modulus_ == 0 ? FieldSpec::rationals() : FieldSpec(FieldSpec::Kind::prime, modulus_);
}

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(value_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return modulus_ == 0 ? value_ == 1 : residue_ == 1; }

mpq_class Scalar::to_rational() const { return modulus_ == 0 ? value_ : mpq_class(residue_); }

void Scalar::check_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = modulus_ - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0) {
    value_ += rhs.value_;
  } else {
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + rhs.residue_) % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0) {
    value_ -= rhs.value_;
  } else {
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + modulus_ - rhs.residue_) % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0) {
    value_ *= rhs.value_;
  } else {
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * rhs.residue_ % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = 1 / value_;
  } else {
    r.residue_ = mod_pow(residue_, modulus_ - 2, modulus_);
  }
  return r;
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result = Scalar(1L, field());
  Scalar base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return modulus_ == 0 ? value_.get_str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gencirc
