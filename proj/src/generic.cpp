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

#include "gencirc/generic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gencirc/errors.hpp"

namespace gencirc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

class EntrySource {
 public:
  EntrySource(const RandomSpec& spec, const FieldSpec& field) : field_(field), rng_(splitmix64(spec.seed)) {
    if (spec.entry_bound == 0) throw std::invalid_argument("entry bound must be positive");
    if (field.is_prime()) {
      dist_ = std::uniform_int_distribution<long long>(0, static_cast<long long>(field.modulus()) - 1);
    } else {
      auto b = static_cast<long long>(spec.entry_bound);
      dist_ = std::uniform_int_distribution<long long>(-b, b);
    }
  }

  Scalar next() { return Scalar(static_cast<long>(dist_(rng_)), field_); }

 private:
  FieldSpec field_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long long> dist_;
};

CircuitsSet circuits_after(const Ideal& ideal, const Substitution& g, std::uint32_t degree,
                           std::optional<std::size_t> size_cap) {
  return circuits_truncated(transform(g, ideal), degree, size_cap);
}

}  // namespace

RandomSpec RandomSpec::derive(std::uint64_t stream) const {
  return RandomSpec{splitmix64(seed ^ splitmix64(stream + 0x51ed270b27f5ULL)), entry_bound};
}

NormalizedWeight normalize_weight(const Weight& w) {
  NormalizedWeight out{w, {}, 0};
  out.perm.resize(w.size());
  std::iota(out.perm.begin(), out.perm.end(), 0);
  std::stable_sort(out.perm.begin(), out.perm.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  std::vector<long> sorted;
  for (auto i : out.perm) sorted.push_back(w[i]);
  if (!sorted.empty() && sorted.back() < 0) out.shift = -sorted.back();
  for (auto& e : sorted) e += out.shift;
  out.sorted = Weight(std::move(sorted));
  return out;
}

Substitution relabeling_for(const RingPtr& ring, const NormalizedWeight& nw) {
  return Substitution::relabeling(ring, nw.perm);
}

Substitution random_change(const RandomSpec& spec, const RingPtr& ring, unsigned max_draws) {
  const auto n = ring->nvars();
  for (unsigned draw = 0; draw < max_draws; ++draw) {
    EntrySource source(spec.derive(draw), ring->field());
    Matrix m(n, n, ring->field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = source.next();
    if (!determinant(m).is_zero()) return Substitution(ring, std::move(m), Substitution::Action::row);
  }
  throw CertificationFailure("uncertified", "no invertible matrix found in " + std::to_string(max_draws) + " draws");
}

GcsResult gcs_truncated(const Ideal& ideal, std::uint32_t degree, const RandomSpec& spec, unsigned retries,
                        std::optional<std::size_t> size_cap) {
  if (retries == 0) throw std::invalid_argument("retries must be positive");
  RandomSpec round = spec;
  for (unsigned r = 0; r < retries; ++r) {
    auto g1 = random_change(round.derive(2 * r), ideal.ring());
    auto g2 = random_change(round.derive(2 * r + 1), ideal.ring());
    auto c1 = circuits_after(ideal, g1, degree, size_cap);
    auto c2 = circuits_after(ideal, g2, degree, size_cap);
    if (c1 == c2) return GcsResult{std::move(c1), r + 1, round.entry_bound, ideal.ring()->field().is_prime()};
    round.entry_bound *= 2;
  }
  throw CertificationFailure("uncertified", "independent random changes disagreed in " + std::to_string(retries) +
                                                " rounds");
}

BorelOmegaElement::BorelOmegaElement(Weight w, Matrix m) : weight_(std::move(w)), matrix_(std::move(m)) {
  const auto n = weight_.size();
  if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("B_w element of the wrong size");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (weight_[i] < weight_[i + 1]) throw std::invalid_argument("B_w needs a non-increasing weight");
  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix_.at(i, i).is_one()) throw std::invalid_argument("B_w element needs a unit diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || matrix_.at(i, j).is_zero()) continue;
      if (i > j) throw std::invalid_argument("B_w element must be upper triangular");
      if (weight_[i] == weight_[j]) throw std::invalid_argument("B_w element has an entry between equal weights");
    }
  }
}

BorelOmegaElement BorelOmegaElement::identity(Weight w, const FieldSpec& field) {
  auto n = w.size();
  return BorelOmegaElement(std::move(w), Matrix::identity(n, field));
}

BorelOmegaElement BorelOmegaElement::inverse() const {
  auto inv = gencirc::inverse(matrix_);
  return BorelOmegaElement(weight_, std::move(*inv));
}

Substitution BorelOmegaElement::substitution(const RingPtr& ring, Substitution::Action action) const {
  return Substitution(ring, matrix_, action);
}

BorelOmegaElement operator*(const BorelOmegaElement& a, const BorelOmegaElement& b) {
  if (!(a.weight_ == b.weight_)) throw std::invalid_argument("B_w elements for different weights");
  return BorelOmegaElement(a.weight_, a.matrix_ * b.matrix_);
}

bool borel_omega_trivial(const Weight& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] != sorted[0]) return false;
  return true;
}

BorelOmegaElement borel_omega_sample(const Weight& sorted, const RandomSpec& spec, const FieldSpec& field) {
  const auto n = sorted.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (sorted[i] < sorted[i + 1]) throw std::invalid_argument("B_w needs a non-increasing weight");
  EntrySource source(spec, field);
  Matrix m = Matrix::identity(n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sorted[i] != sorted[j]) m.at(i, j) = source.next();
  return BorelOmegaElement(sorted, std::move(m));
}

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).to_string());
  return out;
}

bool StabGTrial::pass() const {
  return std::all_of(b_trials.begin(), b_trials.end(), [](const StabBTrial& t) { return t.pass; });
}

bool StabReport::pass() const {
  return std::all_of(g_trials.begin(), g_trials.end(), [](const StabGTrial& t) { return t.pass(); });
}

StabReport stab_check(const Ideal& ideal, const Weight& w, const RandomSpec& spec, const StabOptions& options) {
  const auto& ring = ideal.ring();
  if (w.size() != ring->nvars()) throw std::invalid_argument("weight dimension mismatch");
  StabReport report;
  report.weight = normalize_weight(w);
  report.trivial = borel_omega_trivial(report.weight.sorted);
  report.heuristic = ring->field().is_prime();
  const Ideal relabeled = transform(relabeling_for(ring, report.weight), ideal);

  for (std::uint32_t gi = 0; gi < options.g_trials; ++gi) {
    const RandomSpec g_spec = spec.derive(gi + 1);
    Substitution g = options.identity_g
                         ? Substitution(ring, Matrix::identity(ring->nvars(), ring->field()), Substitution::Action::row)
                         : random_change(g_spec, ring);
    const Ideal j = initial_ideal_w(transform(g, relabeled), report.weight.sorted, options.tie);
    const auto& basis = j.groebner_basis(canonical_order()).elements;
    StabGTrial trial;
    trial.g_matrix = matrix_strings(g.matrix());
    for (const auto& f : basis) trial.initial_ideal.push_back(f.to_string());
    for (std::uint32_t bi = 0; bi < options.b_trials; ++bi) {
      auto b = borel_omega_sample(report.weight.sorted, g_spec.derive(1000 + bi), ring->field());
      auto s = b.substitution(ring, options.b_action);
      StabBTrial bt;
      bt.b_matrix = matrix_strings(b.matrix());
      for (const auto& f : basis) {
        auto image = s.apply(f);
        if (!ideal_contains(j, image)) {
          bt.pass = false;
          bt.witness = image.to_string();
          break;
        }
      }
      trial.b_trials.push_back(std::move(bt));
    }
    report.g_trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace gencirc
