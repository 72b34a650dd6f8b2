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
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gencirc/ring.hpp"

namespace gencirc {

/// lex, degrevlex, or a weight refined by a tie-breaking order (the order "<_w").
/// Variables compare in declaration order: x_1 > x_2 > ... > x_n.
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex, weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex); }
  /// Throws std::invalid_argument when `tie` is already refined by the same weight.
  static MonomialOrder weighted(Weight w, const MonomialOrder& tie);
  /// "lex", "drl", "w:2,1,0;tie=drl" (tie defaults to drl; ties may nest).
  static MonomialOrder parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// Only for weighted orders.
  const Weight& weight() const;
  const MonomialOrder& tie() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<Weight> weight_;
  std::shared_ptr<const MonomialOrder> tie_;
};

/// The order used to canonicalize ideals (reduced bases, fingerprints).
inline MonomialOrder canonical_order() { return MonomialOrder::degrevlex(); }

/// Greatest term of f under `o`. Throws std::invalid_argument on the zero polynomial.
Term leading_term(const Polynomial& f, const MonomialOrder& o);

}  // namespace gencirc
