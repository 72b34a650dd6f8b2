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

#include "gencirc/circuits.hpp"
#include "gencirc/groebner.hpp"

namespace gencirc {

/// Seed and entry range for random matrices. Over Q entries are uniform in
/// [-entry_bound, entry_bound]; over GF(p) they are uniform in the field.
struct RandomSpec {
  std::uint64_t seed = 0;
  std::uint64_t entry_bound = 10000;

  /// An independent stream; derive(i) is a pure function of (seed, i).
  RandomSpec derive(std::uint64_t stream) const;
};

struct NormalizedWeight {
  Weight sorted{std::vector<long>{0}};  ///< non-increasing, non-negative
  std::vector<std::size_t> perm;  ///< sorted position k holds original variable perm[k]
  long shift = 0;                 ///< added to every entry
};

/// Stable sort into non-increasing order, then shift so the smallest entry is >= 0.
NormalizedWeight normalize_weight(const Weight& w);

/// x_{perm[k]} -> x_k for the permutation of a normalized weight.
Substitution relabeling_for(const RingPtr& ring, const NormalizedWeight& nw);

/// Invertible row-action substitution drawn from `spec` (singular draws are redrawn).
Substitution random_change(const RandomSpec& spec, const RingPtr& ring, unsigned max_draws = 32);

struct GcsResult {
  CircuitsSet circuits;
  unsigned rounds = 0;            ///< rounds used, 1-based
  std::uint64_t entry_bound = 0;  ///< bound of the certifying round
  /// True over prime fields, where the genericity argument needs an infinite field.
  bool heuristic = false;
};

/// cs((gI)_{<=d}) certified by agreement of two independent random g. Each failed round
/// doubles the entry bound; after `retries` rounds throws CertificationFailure("uncertified").
GcsResult gcs_truncated(const Ideal& ideal, std::uint32_t degree, const RandomSpec& spec, unsigned retries = 3,
                        std::optional<std::size_t> size_cap = std::nullopt);

/// Upper unitriangular matrix with m_ij = 0 whenever w_i = w_j, for a non-increasing w.
/// Acts by the column convention x_j -> sum_{i<=j} m_ij x_i, so every variable picks up
/// only variables of strictly larger weight.
class BorelOmegaElement {
 public:
  BorelOmegaElement(Weight w, Matrix m);
  static BorelOmegaElement identity(Weight w, const FieldSpec& field);

  const Weight& weight() const noexcept { return weight_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  BorelOmegaElement inverse() const;
  Substitution substitution(const RingPtr& ring,
                            Substitution::Action action = Substitution::Action::column) const;

  friend BorelOmegaElement operator*(const BorelOmegaElement& a, const BorelOmegaElement& b);
  friend bool operator==(const BorelOmegaElement&, const BorelOmegaElement&) = default;

 private:
  Weight weight_;
  Matrix matrix_;
};

/// True when B_w has only the identity (all weights equal).
bool borel_omega_trivial(const Weight& sorted);

BorelOmegaElement borel_omega_sample(const Weight& sorted, const RandomSpec& spec, const FieldSpec& field);

struct StabOptions {
  std::uint32_t g_trials = 2;
  std::uint32_t b_trials = 5;
  MonomialOrder tie = MonomialOrder::degrevlex();
  /// Negative control: use g = identity instead of a random change.
  bool identity_g = false;
  Substitution::Action b_action = Substitution::Action::column;
};

struct StabBTrial {
  std::vector<std::vector<std::string>> b_matrix;
  bool pass = true;
  /// A generator f of J with b(f) outside J, printed as b(f).
  std::optional<std::string> witness;
};

struct StabGTrial {
  std::vector<std::vector<std::string>> g_matrix;
  std::vector<std::string> initial_ideal;  ///< canonical reduced basis of J = in_w(gI)
  std::vector<StabBTrial> b_trials;
  bool pass() const;
};

struct StabReport {
  NormalizedWeight weight;
  bool trivial = false;    ///< B_w = {id}
  bool heuristic = false;  ///< prime field
  std::vector<StabGTrial> g_trials;
  bool pass() const;
};

/// For each random g: J = in_w(gI) with w normalized (variables relabeled accordingly);
/// for each random b in B_w checks b(J) = J. Since b is invertible, b(J) and J share their
/// Hilbert function, so b(J) = J follows from b(f) in J for the generators f of J.
StabReport stab_check(const Ideal& ideal, const Weight& w, const RandomSpec& spec, const StabOptions& options = {});

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m);

}  // namespace gencirc
