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
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gencirc/linalg.hpp"
#include "gencirc/order.hpp"
#include "gencirc/ring.hpp"

namespace gencirc {

struct GroebnerBasis {
  MonomialOrder order;
  /// Monic, sorted by ascending leading monomial.
  std::vector<Polynomial> elements;
  bool reduced = true;

  std::vector<Monomial> leading_monomials() const;
  std::uint32_t max_degree() const;
};

/// A homogeneous ideal given by generators, with reduced Groebner bases cached per order.
/// Copies share the cache; the cache is guarded by a mutex.
class Ideal {
 public:
  /// Zero generators are dropped; non-homogeneous ones are rejected.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  std::uint32_t max_generator_degree() const;

  /// Reduced Groebner basis for `order`, computed on first use.
  const GroebnerBasis& groebner_basis(const MonomialOrder& order) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Full reduction of f by G: no monomial of the result is divisible by a leading
/// monomial of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

/// Buchberger's algorithm (normal strategy, coprime criterion, degree by degree),
/// followed by minimalization and interreduction. Uncached; prefer Ideal::groebner_basis.
GroebnerBasis buchberger_reduced(const Ideal& ideal, const MonomialOrder& order);

/// Monomial ideal of leading monomials.
Ideal initial_ideal(const Ideal& ideal, const MonomialOrder& order);

/// in_w(I), generated by the initial forms of the reduced basis for "<_w" refined by `tie`.
Ideal initial_ideal_w(const Ideal& ideal, const Weight& w, const MonomialOrder& tie = MonomialOrder::degrevlex());

bool ideal_contains(const Ideal& ideal, const Polynomial& f);

/// Equality of reduced bases for the canonical order.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Canonical text key of an ideal: its canonical reduced basis.
std::string fingerprint(const Ideal& ideal);

/// Generators mapped through a change of variables.
Ideal transform(const Substitution& s, const Ideal& ideal);

GradedMatrix graded_basis(const Ideal& ideal, std::uint32_t degree);

struct HilbertData {
  std::vector<std::size_t> ideal_dims;    ///< dim I_d for d = 0..dmax
  std::vector<std::size_t> ambient_dims;  ///< dim A_d
  /// Largest degree of a minimal generator of the canonical initial ideal; the Hilbert
  /// function grows maximally past any degree >= this where it grows maximally once.
  std::uint32_t generator_degree = 0;

  std::size_t quotient_dim(std::size_t d) const { return ambient_dims.at(d) - ideal_dims.at(d); }
  std::size_t max_degree() const { return ideal_dims.size() - 1; }
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

HilbertData hilbert_function(const Ideal& ideal, std::uint32_t dmax);

struct LexSegment {
  Ideal ideal;                  ///< minimal monomial generators
  std::uint32_t bound = 0;      ///< largest generator degree (0 for the zero ideal)
  std::uint32_t certified_at = 0;  ///< degree e past which the lex ideal provably has no generators
};

/// Thrown when a Hilbert function violates Macaulay's growth bound.
class MacaulayViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lex-segment ideal with Hilbert function H, built degree by degree up to `cap`
/// (H must cover 0..cap). Throws MacaulayViolation on inconsistent input and
/// CertificationFailure("lexseg-cap") when no degree e >= H.generator_degree with
/// L_{e+1} = A_1 L_e is found below the cap.
LexSegment lex_segment(const HilbertData& h, const RingPtr& ring, std::uint32_t cap);

/// Default cap: generator degree of the canonical initial ideal plus the number of variables.
std::uint32_t default_lex_cap(const Ideal& ideal);

struct HomogenizedIdeal {
  Ideal base;
  Weight weight;
  RingPtr ring;  ///< base ring with `t` appended
  std::vector<Polynomial> generators;
};

/// Homogenizes the "<_w" reduced basis of I with respect to an integral weight.
HomogenizedIdeal homogenize_ideal_w(const Ideal& ideal, const Weight& w,
                                    const MonomialOrder& tie = MonomialOrder::degrevlex());

/// The member of the family at t = a.
Ideal specialize_t(const HomogenizedIdeal& h, const Scalar& a);

}  // namespace gencirc
