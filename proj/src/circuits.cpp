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

#include "gencirc/circuits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gencirc {

namespace {

bool canonical_greater(const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) > 0; }

constexpr std::uint64_t kFilterPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

/// Decides whether the columns outside a candidate support still have full row rank,
/// i.e. whether W has no nonzero vector supported inside the candidate.
class SupportTester {
 public:
  explicit SupportTester(const GradedMatrix& w) : w_(w), k_(w.dim()), n_(w.columns()) {
    const auto& field = w.ring()->field();
    exact_modular_ = field.is_prime();
    p_ = exact_modular_ ? field.modulus() : kFilterPrime;
    rows_.assign(k_, std::vector<std::uint64_t>(n_, 0));
    for (std::size_t r = 0; r < k_; ++r) {
      if (exact_modular_) {
        for (std::size_t c = 0; c < n_; ++c) rows_[r][c] = w.rows().at(r, c).residue();
        continue;
      }
      // Scale the row to integers; any nonzero minor mod p lifts to a nonzero integer minor.
      mpz_class scale = 1;
      for (std::size_t c = 0; c < n_; ++c)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.rows().at(r, c).to_rational().get_den_mpz_t());
      for (std::size_t c = 0; c < n_; ++c) {
        mpz_class v = mpq_class(w.rows().at(r, c).to_rational() * scale).get_num();
        mpz_class red;
        mpz_fdiv_r_ui(red.get_mpz_t(), v.get_mpz_t(), p_);
        rows_[r][c] = red.get_ui();
      }
    }
  }

  /// True iff some nonzero vector of W is supported inside `support` (a column mask).
  bool dependent(std::uint64_t support) const {
    std::vector<std::size_t> outside;
    for (std::size_t c = 0; c < n_; ++c)
      if (!(support >> c & 1U)) outside.push_back(c);
    if (outside.size() < k_) return true;
    if (modular_rank(outside) == k_) return false;
    if (exact_modular_) return true;
    return rank(w_.rows().select_columns(outside)) < k_;
  }

 private:
  std::size_t modular_rank(const std::vector<std::size_t>& cols) const {
    std::vector<std::vector<std::uint64_t>> a(k_, std::vector<std::uint64_t>(cols.size()));
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) a[r][j] = rows_[r][cols[j]];
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < k_; ++col) {
      std::size_t piv = rank;
      while (piv < k_ && a[piv][col] == 0) ++piv;
      if (piv == k_) continue;
      std::swap(a[piv], a[rank]);
      std::uint64_t inv = inverse_mod(a[rank][col], p_);
      for (std::size_t i = rank + 1; i < k_; ++i) {
        if (a[i][col] == 0) continue;
        std::uint64_t f = a[i][col] * inv % p_;
        for (std::size_t j = col; j < cols.size(); ++j) a[i][j] = (a[i][j] + (p_ - f) * a[rank][j]) % p_;
      }
      ++rank;
    }
    return rank;
  }

  const GradedMatrix& w_;
  std::size_t k_;
  std::size_t n_;
  bool exact_modular_ = false;
  std::uint64_t p_ = kFilterPrime;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Calls visit(mask) for every subset of {0..n-1} of the given size, in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= 1ULL << i;
    visit(mask);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Circuit Circuit::of(std::uint32_t degree, std::vector<Monomial> monomials) {
  if (monomials.empty()) throw std::invalid_argument("empty circuit");
  std::sort(monomials.begin(), monomials.end(), canonical_greater);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  for (const auto& m : monomials)
    if (m.degree() != degree) throw std::invalid_argument("circuit monomial of the wrong degree");
  return Circuit{degree, std::move(monomials)};
}

bool Circuit::contains(const Circuit& other) const {
  return degree == other.degree &&
         std::includes(monomials.begin(), monomials.end(), other.monomials.begin(), other.monomials.end(),
                       canonical_greater);
}

bool operator<(const Circuit& a, const Circuit& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.monomials.size() != b.monomials.size()) return a.monomials.size() < b.monomials.size();
  return std::lexicographical_compare(a.monomials.begin(), a.monomials.end(), b.monomials.begin(), b.monomials.end(),
                                      canonical_greater);
}

SpaceCircuits circuits_of_space(const GradedMatrix& w, std::optional<std::size_t> size_cap) {
  SpaceCircuits out;
  const std::size_t n = w.columns();
  const std::size_t k = w.dim();
  if (k == 0) return out;
  if (n > 64) throw std::invalid_argument("circuit enumeration supports at most 64 monomial columns");
  if (size_cap && *size_cap == 0) throw std::invalid_argument("size cap must be positive");
  const std::size_t largest = n - k + 1;
  const std::size_t limit = size_cap ? std::min(*size_cap, largest) : largest;
  out.complete = limit == largest;

  SupportTester tester(w);
  std::vector<std::uint64_t> found;
  for (std::size_t size = 1; size <= limit; ++size) {
    std::vector<std::uint64_t> fresh;
    for_each_subset(n, size, [&](std::uint64_t mask) {
      for (auto c : found)
        if ((mask & c) == c) return;
      if (tester.dependent(mask)) fresh.push_back(mask);
    });
    found.insert(found.end(), fresh.begin(), fresh.end());
  }
  for (auto mask : found) {
    std::vector<Monomial> mons;
    for (std::size_t c = 0; c < n; ++c)
      if (mask >> c & 1U) mons.push_back(w.basis()[c]);
    out.circuits.push_back(Circuit::of(w.degree(), std::move(mons)));
  }
  std::sort(out.circuits.begin(), out.circuits.end());
  return out;
}

bool is_circuit(const GradedMatrix& w, std::span<const Monomial> s) {
  if (s.empty()) return false;
  if (rank_rel(w, s, RankMode::sub) >= s.size()) return false;
  std::vector<Monomial> smaller(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.size() == 1) break;
    std::vector<Monomial> drop;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) drop.push_back(s[j]);
    if (rank_rel(w, drop, RankMode::sub) != drop.size()) return false;
  }
  return true;
}

void CircuitsSet::add_degree(std::uint32_t degree, SpaceCircuits circuits) {
  complete_ = complete_ && circuits.complete;
  if (circuits.circuits.empty()) return;
  auto& slot = by_degree_[degree];
  slot.insert(slot.end(), circuits.circuits.begin(), circuits.circuits.end());
  std::sort(slot.begin(), slot.end());
  slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
}

std::span<const Circuit> CircuitsSet::in_degree(std::uint32_t degree) const {
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end()) return {};
  return it->second;
}

std::size_t CircuitsSet::size() const {
  std::size_t total = 0;
  for (const auto& [d, cs] : by_degree_) total += cs.size();
  return total;
}

bool CircuitsSet::contains(const Circuit& c) const {
  auto cs = in_degree(c.degree);
  return std::binary_search(cs.begin(), cs.end(), c);
}

CircuitsSet circuits_truncated(const Ideal& ideal, std::uint32_t degree, std::optional<std::size_t> size_cap) {
  CircuitsSet out(degree);
  for (std::uint32_t h = 0; h <= degree; ++h) out.add_degree(h, circuits_of_space(graded_basis(ideal, h), size_cap));
  return out;
}

CircuitsSet initial_circuits(const CircuitsSet& t, const Weight& w) {
  CircuitsSet out = t.truncation() ? CircuitsSet(*t.truncation()) : CircuitsSet();
  for (const auto& [degree, circuits] : t.by_degree()) {
    std::set<Circuit> images;
    for (const auto& c : circuits) {
      long top = weight_value(c.monomials.front(), w);
      for (const auto& m : c.monomials) top = std::max(top, weight_value(m, w));
      std::vector<Monomial> kept;
      for (const auto& m : c.monomials)
        if (weight_value(m, w) == top) kept.push_back(m);
      images.insert(Circuit::of(degree, std::move(kept)));
    }
    SpaceCircuits minimal;
    for (const auto& c : images) {
      bool has_smaller = std::any_of(images.begin(), images.end(),
                                     [&](const Circuit& o) { return !(o == c) && c.contains(o); });
      if (!has_smaller) minimal.circuits.push_back(c);
    }
    minimal.complete = t.complete();
    out.add_degree(degree, std::move(minimal));
  }
  return out;
}

bool AlphaVector::dominates(const AlphaVector& other) const {
  if (values.size() != other.values.size()) throw std::invalid_argument("alpha vectors of different lengths");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < other.values[i]) return false;
  return true;
}

std::vector<Monomial> monomials_below_weight(std::size_t nvars, std::uint32_t degree, const Weight& w, long bound) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(nvars, degree))
    if (weight_value(m, w) < bound) out.push_back(std::move(m));
  return out;
}

AlphaVector alpha_vector(const GradedMatrix& w, const Weight& weight) {
  const auto n = w.ring()->nvars();
  if (weight.size() != n) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (weight[i] < 0) throw std::invalid_argument("alpha vector needs a non-negative weight");
    if (i > 0 && weight[i] > weight[i - 1]) throw std::invalid_argument("alpha vector needs a non-increasing weight");
  }
  AlphaVector alpha{w.degree(), weight.entries(), {}};
  const long top = weight[0] * static_cast<long>(w.degree());
  for (long a = top; a >= 1; --a) {
    auto s = monomials_below_weight(n, w.degree(), weight, a);
    alpha.values.push_back(rank_rel(w, s, RankMode::sup));
  }
  return alpha;
}

}  // namespace gencirc
