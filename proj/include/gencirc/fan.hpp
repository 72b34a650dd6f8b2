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
#include <optional>
#include <string>
#include <vector>

#include "gencirc/generic.hpp"
#include "gencirc/groebner.hpp"

namespace gencirc {

using IntVector = std::vector<long>;

/// Closed polyhedral cone { w : w.v = 0 for v in equalities, w.v >= 0 for v in
/// inequalities }. Vectors are divided by the gcd of their entries, equalities carry a
/// positive first nonzero entry, zero vectors are dropped and both lists are sorted.
class Cone {
 public:
  Cone() = default;
  Cone(std::vector<IntVector> equalities, std::vector<IntVector> inequalities);

  const std::vector<IntVector>& equalities() const noexcept { return equalities_; }
  const std::vector<IntVector>& inequalities() const noexcept { return inequalities_; }

  bool contains(const Weight& w) const;
  /// Equalities hold and every inequality is strict.
  bool contains_relative_interior(const Weight& w) const;
  bool full_dimensional() const noexcept { return equalities_.empty(); }

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::vector<IntVector> equalities_;
  std::vector<IntVector> inequalities_;
};

/// in_w(supp f_i) = in_w2(supp f_i) for the reduced basis f_i of the w-refined order.
bool weight_equiv(const Ideal& ideal, const Weight& w, const Weight& w2,
                  const MonomialOrder& tie = MonomialOrder::degrevlex());

/// Equalities a - b for a, b in in_w(supp f_i); inequalities a - c for c outside it.
Cone cone_of(const Ideal& ideal, const Weight& w, const MonomialOrder& tie = MonomialOrder::degrevlex());

struct FanCell {
  std::string fingerprint;  ///< canonical reduced basis of in_w(I)
  std::vector<std::string> initial_ideal;
  Weight representative;
  Cone cone;
};

/// Cells met by the sampled weights of a box. Nothing is claimed about cells outside it.
struct FanSketch {
  std::vector<FanCell> cells;
  long box = 0;
  long step = 1;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;

  const FanCell* find(const std::string& fingerprint) const;
};

/// Integer weights of [-B, B]^n on the grid -B + step*k with some entry equal to -B (one
/// representative per translate by multiples of (1,...,1)). Throws std::logic_error if a
/// sample is not covered by the cone of its own cell.
FanSketch enumerate_fan(const Ideal& ideal, long box, long step = 1,
                        const MonomialOrder& tie = MonomialOrder::degrevlex());

/// Cells of (f) from the argmax sets of w . a over supp(f), on the same sample grid.
FanSketch newton_fan_oracle(const Polynomial& f, long box, long step = 1);

/// Union of the reduced bases of the w-refined orders over the full-dimensional cells,
/// each element scaled to be monic for degrevlex, without repetitions.
std::vector<Polynomial> universal_basis(const Ideal& ideal, const FanSketch& sketch,
                                        const MonomialOrder& tie = MonomialOrder::degrevlex());

enum class FanCompareMode { generic, deterministic };
enum class FanVerdict { equal_fan_certified, inconclusive, incomparable };

std::string to_string(FanVerdict v);

struct FanComparison {
  FanVerdict verdict = FanVerdict::inconclusive;
  std::uint32_t bound = 0;  ///< D, largest generator degree of the lex-segment ideal
  HilbertData hilbert_left;
  HilbertData hilbert_right;
  std::optional<CircuitsSet> left;
  std::optional<CircuitsSet> right;
  bool heuristic = false;
};

/// Compares circuits sets truncated at the lex-segment bound D of the shared Hilbert
/// function. Agreement certifies equal Groebner fans (generic mode: of gI and gJ); the
/// converse does not hold, so disagreement is inconclusive.
FanComparison generic_fan_compare(const Ideal& left, const Ideal& right, const RandomSpec& spec,
                                  FanCompareMode mode = FanCompareMode::generic,
                                  std::optional<std::uint32_t> lex_cap = std::nullopt);

}  // namespace gencirc
