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

#include "gencirc/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gencirc {

namespace {

IntVector exponent_difference(const Monomial& a, const Monomial& b) {
  IntVector v(a.exponents().size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = static_cast<long>(a.exponents()[i]) - static_cast<long>(b.exponents()[i]);
  return v;
}

bool normalize(IntVector& v) {
  long g = 0;
  for (auto e : v) g = std::gcd(g, e);
  if (g == 0) return false;
  for (auto& e : v) e /= g;
  return true;
}

void canonical_sign(IntVector& v) {
  auto first = std::find_if(v.begin(), v.end(), [](long e) { return e != 0; });
  if (first != v.end() && *first < 0)
    for (auto& e : v) e = -e;
}

void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

long dot(const Weight& w, const IntVector& v) {
  if (w.size() != v.size()) throw std::invalid_argument("weight dimension mismatch");
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
  return s;
}

std::vector<Monomial> argmax_support(const Polynomial& f, const Weight& w) {
  long top = 0;
  bool first = true;
  for (const auto& t : f.terms()) {
    long v = weight_value(t.monomial, w);
    if (first || v > top) top = v;
    first = false;
  }
  std::vector<Monomial> out;
  for (const auto& t : f.terms())
    if (weight_value(t.monomial, w) == top) out.push_back(t.monomial);
  return out;
}

// Equalities and inequalities contributed by one polynomial whose selected support is `top`.
void add_constraints(const Polynomial& f, const std::vector<Monomial>& top, std::vector<IntVector>& eq,
                     std::vector<IntVector>& ineq) {
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j) eq.push_back(exponent_difference(top[i], top[j]));
  for (const auto& a : top)
    for (const auto& t : f.terms())
      if (std::find(top.begin(), top.end(), t.monomial) == top.end())
        ineq.push_back(exponent_difference(a, t.monomial));
}

// Calls visit(w) for each grid weight with some entry equal to -box.
template <class Visit>
void for_each_sample(std::size_t n, long box, long step, Visit&& visit) {
  if (box < 1) throw std::invalid_argument("box bound must be positive");
  if (step < 1) throw std::invalid_argument("step must be positive");
  const long count = 2 * box / step + 1;
  std::vector<long> idx(n, 0);
  while (true) {
    std::vector<long> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = -box + idx[i] * step;
    if (std::find(w.begin(), w.end(), -box) != w.end()) visit(Weight(std::move(w)));
    std::size_t i = 0;
    while (i < n && ++idx[i] == count) idx[i++] = 0;
    if (i == n) return;
  }
}

Polynomial monic_canonical(const Polynomial& f) {
  return f * f.terms().front().coefficient.inverse();
}

}  // namespace

Cone::Cone(std::vector<IntVector> equalities, std::vector<IntVector> inequalities) {
  for (auto& v : equalities) {
    if (!normalize(v)) continue;
    canonical_sign(v);
    equalities_.push_back(std::move(v));
  }
  for (auto& v : inequalities)
    if (normalize(v)) inequalities_.push_back(std::move(v));
  sort_unique(equalities_);
  sort_unique(inequalities_);
}

bool Cone::contains(const Weight& w) const {
  for (const auto& v : equalities_)
    if (dot(w, v) != 0) return false;
  for (const auto& v : inequalities_)
    if (dot(w, v) < 0) return false;
  return true;
}

bool Cone::contains_relative_interior(const Weight& w) const {
  for (const auto& v : equalities_)
    if (dot(w, v) != 0) return false;
  for (const auto& v : inequalities_)
    if (dot(w, v) <= 0) return false;
  return true;
}

bool weight_equiv(const Ideal& ideal, const Weight& w, const Weight& w2, const MonomialOrder& tie) {
  for (const auto& f : ideal.groebner_basis(MonomialOrder::weighted(w, tie)).elements)
    if (argmax_support(f, w) != argmax_support(f, w2)) return false;
  return true;
}

Cone cone_of(const Ideal& ideal, const Weight& w, const MonomialOrder& tie) {
  std::vector<IntVector> eq, ineq;
  for (const auto& f : ideal.groebner_basis(MonomialOrder::weighted(w, tie)).elements)
    add_constraints(f, argmax_support(f, w), eq, ineq);
  return Cone(std::move(eq), std::move(ineq));
}

const FanCell* FanSketch::find(const std::string& fingerprint) const {
  for (const auto& c : cells)
    if (c.fingerprint == fingerprint) return &c;
  return nullptr;
}

FanSketch enumerate_fan(const Ideal& ideal, long box, long step, const MonomialOrder& tie) {
  FanSketch sketch;
  sketch.box = box;
  sketch.step = step;
  for_each_sample(ideal.ring()->nvars(), box, step, [&](const Weight& w) {
    ++sketch.samples;
    for (const auto& c : sketch.cells)
      if (c.cone.contains_relative_interior(w)) return;
    Ideal in = initial_ideal_w(ideal, w, tie);
    std::string key = fingerprint(in);
    if (sketch.find(key)) {
      throw std::logic_error("weight " + w.to_string() + " lies outside the cone of its own cell");
    }
    Cone cone = cone_of(ideal, w, tie);
    if (!cone.contains_relative_interior(w)) {
      throw std::logic_error("cone of weight " + w.to_string() + " does not contain it");
    }
    std::vector<std::string> gens;
    for (const auto& g : in.groebner_basis(canonical_order()).elements) gens.push_back(g.to_string());
    sketch.cells.push_back(FanCell{std::move(key), std::move(gens), w, std::move(cone)});
  });
  return sketch;
}

FanSketch newton_fan_oracle(const Polynomial& f, long box, long step) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  FanSketch sketch;
  sketch.box = box;
  sketch.step = step;
  for_each_sample(f.ring()->nvars(), box, step, [&](const Weight& w) {
    ++sketch.samples;
    auto top = argmax_support(f, w);
    std::vector<Term> kept;
    for (const auto& t : f.terms())
      if (std::find(top.begin(), top.end(), t.monomial) != top.end()) kept.push_back(t);
    Polynomial in = monic_canonical(Polynomial::from_terms(f.ring(), std::move(kept)));
    std::string key = in.to_string();
    if (sketch.find(key)) return;
    std::vector<IntVector> eq, ineq;
    add_constraints(f, top, eq, ineq);
    sketch.cells.push_back(FanCell{key, {key}, w, Cone(std::move(eq), std::move(ineq))});
  });
  return sketch;
}

std::vector<Polynomial> universal_basis(const Ideal& ideal, const FanSketch& sketch, const MonomialOrder& tie) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (const auto& cell : sketch.cells) {
    if (!cell.cone.full_dimensional()) continue;
    for (const auto& g : ideal.groebner_basis(MonomialOrder::weighted(cell.representative, tie)).elements) {
      Polynomial m = monic_canonical(g);
      if (seen.insert(m.to_string()).second) out.push_back(std::move(m));
    }
  }
  return out;
}

std::string to_string(FanVerdict v) {
  switch (v) {
    case FanVerdict::equal_fan_certified:
      return "EQUAL-FAN-CERTIFIED";
    case FanVerdict::inconclusive:
      return "INCONCLUSIVE";
    case FanVerdict::incomparable:
      return "incomparable: Hilbert mismatch";
  }
  return "?";
}

FanComparison generic_fan_compare(const Ideal& left, const Ideal& right, const RandomSpec& spec, FanCompareMode mode,
                                  std::optional<std::uint32_t> lex_cap) {
  if (!(*left.ring() == *right.ring())) throw std::invalid_argument("ideals from different rings");
  const std::uint32_t cap = lex_cap.value_or(std::max(default_lex_cap(left), default_lex_cap(right)));
  FanComparison out;
  out.hilbert_left = hilbert_function(left, cap);
  out.hilbert_right = hilbert_function(right, cap);
  if (out.hilbert_left.ideal_dims != out.hilbert_right.ideal_dims) {
    out.verdict = FanVerdict::incomparable;
    return out;
  }
  HilbertData shared = out.hilbert_left;
  shared.generator_degree = std::max(out.hilbert_left.generator_degree, out.hilbert_right.generator_degree);
  out.bound = lex_segment(shared, left.ring(), cap).bound;
  if (mode == FanCompareMode::generic) {
    out.left = gcs_truncated(left, out.bound, spec.derive(1)).circuits;
    out.right = gcs_truncated(right, out.bound, spec.derive(2)).circuits;
    out.heuristic = left.ring()->field().is_prime();
  } else {
    out.left = circuits_truncated(left, out.bound);
    out.right = circuits_truncated(right, out.bound);
  }
  out.verdict = *out.left == *out.right ? FanVerdict::equal_fan_certified : FanVerdict::inconclusive;
  return out;
}

}  // namespace gencirc
