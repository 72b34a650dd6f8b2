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

#include "gencirc/groebner.hpp"
#include "gencirc/linalg.hpp"

namespace gencirc {

/// An inclusion-minimal support of a nonzero element of a graded piece. Monomials are
/// kept in descending degrevlex order so that equal circuits compare equal.
struct Circuit {
  std::uint32_t degree = 0;
  std::vector<Monomial> monomials;

  static Circuit of(std::uint32_t degree, std::vector<Monomial> monomials);
  bool contains(const Circuit& other) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend bool operator<(const Circuit& a, const Circuit& b);
};

struct SpaceCircuits {
  std::vector<Circuit> circuits;  ///< sorted
  /// False when the size cap stopped the enumeration below the largest possible
  /// circuit size dim A_d - dim W + 1.
  bool complete = true;
};

/// Circuits of W by enumeration of candidate supports in increasing size, pruning
/// supersets of circuits already found. Default cap: no cap.
SpaceCircuits circuits_of_space(const GradedMatrix& w, std::optional<std::size_t> size_cap = std::nullopt);

/// The rank criterion for a single support: rk_S W < |S| and rk_S' W = |S'| for all
/// proper nonempty S' (it suffices to check the maximal ones).
bool is_circuit(const GradedMatrix& w, std::span<const Monomial> s);

/// Circuits grouped by degree, for a truncation I_{<=d} (or any graded family).
class CircuitsSet {
 public:
  CircuitsSet() = default;
  explicit CircuitsSet(std::uint32_t truncation) : truncation_(truncation) {}

  void add_degree(std::uint32_t degree, SpaceCircuits circuits);

  std::optional<std::uint32_t> truncation() const noexcept { return truncation_; }
  bool complete() const noexcept { return complete_; }
  const std::map<std::uint32_t, std::vector<Circuit>>& by_degree() const noexcept { return by_degree_; }
  /// Circuits of one degree (empty if none).
  std::span<const Circuit> in_degree(std::uint32_t degree) const;
  std::size_t size() const;
  bool contains(const Circuit& c) const;

  /// Equality of the circuit families; truncation and completeness are metadata.
  friend bool operator==(const CircuitsSet& a, const CircuitsSet& b) { return a.by_degree_ == b.by_degree_; }

 private:
  std::optional<std::uint32_t> truncation_;
  bool complete_ = true;
  std::map<std::uint32_t, std::vector<Circuit>> by_degree_;  // empty degrees omitted
};

/// cs(I_{<=d}) as the disjoint union of cs(I_h), h <= d.
CircuitsSet circuits_truncated(const Ideal& ideal, std::uint32_t degree,
                               std::optional<std::size_t> size_cap = std::nullopt);

/// { in_w(S) : S in T }, deduplicated and re-minimalized per degree.
CircuitsSet initial_circuits(const CircuitsSet& t, const Weight& w);

/// (rk^{S_{w_1 d}} W, ..., rk^{S_1} W), S_a = degree-d monomials of weight < a.
struct AlphaVector {
  std::uint32_t degree = 0;
  std::vector<long> weight;
  std::vector<std::size_t> values;

  /// Pointwise >=.
  bool dominates(const AlphaVector& other) const;
  /// Pointwise >= and different.
  bool strictly_dominates(const AlphaVector& other) const { return dominates(other) && values != other.values; }
  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

/// Requires w sorted non-increasing with non-negative entries.
AlphaVector alpha_vector(const GradedMatrix& w, const Weight& weight);

/// Degree-d monomials of weight strictly below `bound`.
std::vector<Monomial> monomials_below_weight(std::size_t nvars, std::uint32_t degree, const Weight& w, long bound);

}  // namespace gencirc
