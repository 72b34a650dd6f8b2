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

#include "gencirc/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gencirc/errors.hpp"

namespace gencirc {

namespace {

// Terms kept in descending order for a fixed monomial order.
using SortedTerms = std::vector<Term>;

SortedTerms sorted_by(const Polynomial& f, const MonomialOrder& order) {
  SortedTerms t(f.terms().begin(), f.terms().end());
  if (order.kind() != MonomialOrder::Kind::degrevlex) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  }
  return t;
}

// h - c * m * g, where h and g are sorted; skips the leading terms, which cancel.
SortedTerms cancel_leading(const SortedTerms& h, const Scalar& c, const Monomial& m, const SortedTerms& g,
                           const MonomialOrder& order) {
  SortedTerms out;
  out.reserve(h.size() + g.size());
  std::size_t i = 1, j = 1;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    auto cmp = i == h.size() ? std::strong_ordering::less : order.compare(h[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -(c * g[j].coefficient)});
      ++j;
    } else {
      Scalar s = h[i].coefficient - c * g[j].coefficient;
      if (!s.is_zero()) out.push_back(Term{std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducer {
  const MonomialOrder& order;
  const std::vector<SortedTerms>& basis;  // monic

  const SortedTerms* divisor_of(const Monomial& m, std::size_t skip) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().monomial.divides(m)) return &basis[k];
    }
    return nullptr;
  }

  SortedTerms reduce(SortedTerms h, std::size_t skip = SIZE_MAX) const {
    SortedTerms remainder;
    while (!h.empty()) {
      const auto& lead = h.front();
      if (const SortedTerms* g = divisor_of(lead.monomial, skip)) {
        Monomial q = lead.monomial.quotient(g->front().monomial);
        h = cancel_leading(h, lead.coefficient, q, *g, order);
      } else {
        remainder.push_back(lead);
        h.erase(h.begin());
      }
    }
    return remainder;
  }
};

void make_monic(SortedTerms& t) {
  if (t.empty() || t.front().coefficient.is_one()) return;
  Scalar inv = t.front().coefficient.inverse();
  for (auto& term : t) term.coefficient *= inv;
}

Polynomial to_polynomial(const RingPtr& ring, SortedTerms t) { return Polynomial::from_terms(ring, std::move(t)); }

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements) out.push_back(leading_term(g, order).monomial);
  return out;
}

std::uint32_t GroebnerBasis::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : elements) d = std::max(d, g.degree());
  return d;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_)) throw std::invalid_argument("generator from another ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous: " + g.to_string());
    generators_.push_back(std::move(g));
  }
}

std::uint32_t Ideal::max_generator_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

const GroebnerBasis& Ideal::groebner_basis(const MonomialOrder& order) const {
  const std::string key = order.to_string();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto computed = std::make_unique<GroebnerBasis>(buchberger_reduced(*this, order));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(computed));
  return *it->second;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  std::vector<SortedTerms> basis;
  for (const auto& e : g.elements) {
    basis.push_back(sorted_by(e, g.order));
    make_monic(basis.back());
  }
  Reducer reducer{g.order, basis};
  return to_polynomial(f.ring(), reducer.reduce(sorted_by(f, g.order)));
}

GroebnerBasis buchberger_reduced(const Ideal& ideal, const MonomialOrder& order) {
  const auto& ring = ideal.ring();
  std::vector<SortedTerms> basis;
  struct Pair {
    std::uint32_t degree;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;

  auto add_element = [&](SortedTerms t) {
    make_monic(t);
    const std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (basis[k].empty()) continue;
      const auto& a = basis[k].front().monomial;
      const auto& b = t.front().monomial;
      if (coprime(a, b)) continue;  // Buchberger's first criterion
      pairs.push_back(Pair{lcm(a, b).degree(), k, idx});
    }
    basis.push_back(std::move(t));
  };

  // Generators enter degree by degree, interleaved with the pairs of that degree.
  std::vector<Polynomial> pending = ideal.generators();
  std::sort(pending.begin(), pending.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  std::size_t next_gen = 0;

  while (next_gen < pending.size() || !pairs.empty()) {
    std::uint32_t degree = UINT32_MAX;
    if (next_gen < pending.size()) degree = pending[next_gen].degree();
    for (const auto& p : pairs) degree = std::min(degree, p.degree);

    // Normal selection within the degree: smallest lcm first.
    std::vector<Pair> current;
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.degree != degree) return false;
      current.push_back(p);
      return true;
    });
    std::sort(current.begin(), current.end(), [&](const Pair& a, const Pair& b) {
      auto la = lcm(basis[a.i].front().monomial, basis[a.j].front().monomial);
      auto lb = lcm(basis[b.i].front().monomial, basis[b.j].front().monomial);
      auto c = order.compare(la, lb);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });

    for (const auto& p : current) {
      const auto& f = basis[p.i];
      const auto& g = basis[p.j];
      Monomial l = lcm(f.front().monomial, g.front().monomial);
      Monomial mf = l.quotient(f.front().monomial);
      Monomial mg = l.quotient(g.front().monomial);
      // S(f, g) = mf*f - mg*g with both monic
      SortedTerms sf;
      for (const auto& t : f) sf.push_back(Term{t.monomial * mf, t.coefficient});
      SortedTerms s = cancel_leading(sf, Scalar::one(ring->field()), mg, g, order);
      Reducer reducer{order, basis};
      SortedTerms r = reducer.reduce(std::move(s));
      if (!r.empty()) add_element(std::move(r));
    }

    while (next_gen < pending.size() && pending[next_gen].degree() == degree) {
      Reducer reducer{order, basis};
      SortedTerms r = reducer.reduce(sorted_by(pending[next_gen], order));
      ++next_gen;
      if (!r.empty()) add_element(std::move(r));
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<SortedTerms> minimal;
  std::sort(basis.begin(), basis.end(), [&](const SortedTerms& a, const SortedTerms& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });
  for (auto& b : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const SortedTerms& m) {
      return m.front().monomial.divides(b.front().monomial);
    });
    if (!redundant) minimal.push_back(std::move(b));
  }
  // Interreduce.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Reducer reducer{order, minimal};
    minimal[k] = reducer.reduce(std::move(minimal[k]), k);
    make_monic(minimal[k]);
  }

  GroebnerBasis out{order, {}, true};
  for (auto& m : minimal) out.elements.push_back(to_polynomial(ring, std::move(m)));
  return out;
}

Ideal initial_ideal(const Ideal& ideal, const MonomialOrder& order) {
  const auto& gb = ideal.groebner_basis(order);
  std::vector<Polynomial> gens;
  for (const auto& m : gb.leading_monomials())
    gens.push_back(Polynomial::term(ideal.ring(), m, Scalar::one(ideal.ring()->field())));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal initial_ideal_w(const Ideal& ideal, const Weight& w, const MonomialOrder& tie) {
  const auto& gb = ideal.groebner_basis(MonomialOrder::weighted(w, tie));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements) gens.push_back(initial_form_w(g, w));
  return Ideal(ideal.ring(), std::move(gens));
}

bool ideal_contains(const Ideal& ideal, const Polynomial& f) {
  return normal_form(f, ideal.groebner_basis(canonical_order())).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) throw std::invalid_argument("ideals from different rings");
  return a.groebner_basis(canonical_order()).elements == b.groebner_basis(canonical_order()).elements;
}

std::string fingerprint(const Ideal& ideal) {
  std::string key;
  for (const auto& g : ideal.groebner_basis(canonical_order()).elements) {
    if (!key.empty()) key += "; ";
    key += g.to_string();
  }
  return key.empty() ? "0" : key;
}

Ideal transform(const Substitution& s, const Ideal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(s.apply(g));
  return Ideal(ideal.ring(), std::move(gens));
}

GradedMatrix graded_basis(const Ideal& ideal, std::uint32_t degree) {
  return graded_basis(ideal.ring(), ideal.generators(), degree);
}

HilbertData hilbert_function(const Ideal& ideal, std::uint32_t dmax) {
  const auto& gb = ideal.groebner_basis(canonical_order());
  auto leads = gb.leading_monomials();
  HilbertData h;
  h.generator_degree = gb.max_degree();
  for (std::uint32_t d = 0; d <= dmax; ++d) {
    auto mons = monomials_of_degree(ideal.ring()->nvars(), d);
    std::size_t count = std::count_if(mons.begin(), mons.end(), [&](const Monomial& m) {
      return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    });
    h.ideal_dims.push_back(count);
    h.ambient_dims.push_back(mons.size());
  }
  return h;
}

std::uint32_t default_lex_cap(const Ideal& ideal) {
  return ideal.groebner_basis(canonical_order()).max_degree() + static_cast<std::uint32_t>(ideal.ring()->nvars());
}

LexSegment lex_segment(const HilbertData& h, const RingPtr& ring, std::uint32_t cap) {
  if (h.ideal_dims.size() < static_cast<std::size_t>(cap) + 1) {
    throw std::invalid_argument("Hilbert data does not reach the lex-segment cap");
  }
  const auto n = ring->nvars();
  const auto lex = MonomialOrder::lex();
  std::set<Monomial> previous;
  std::vector<Polynomial> generators;
  std::uint32_t bound = 0;
  for (std::uint32_t d = 0; d <= cap; ++d) {
    auto mons = monomials_of_degree(n, d);
    std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) { return lex.greater(a, b); });
    const std::size_t k = h.ideal_dims[d];
    if (k > mons.size()) throw MacaulayViolation("dim I_" + std::to_string(d) + " exceeds dim A_d");
    std::set<Monomial> segment(mons.begin(), mons.begin() + static_cast<std::ptrdiff_t>(k));
    std::set<Monomial> grown;
    for (const auto& m : previous)
      for (std::size_t i = 0; i < n; ++i) grown.insert(m * Monomial::variable(n, i));
    for (const auto& m : grown) {
      if (!segment.count(m)) {
        throw MacaulayViolation("Hilbert function violates Macaulay's bound in degree " + std::to_string(d));
      }
    }
    bool fresh = false;
    for (const auto& m : mons) {
      if (segment.count(m) && !grown.count(m)) {
        generators.push_back(Polynomial::term(ring, m, Scalar::one(ring->field())));
        bound = d;
        fresh = true;
      }
    }
    // Gotzmann persistence: maximal growth from a degree past every generator of in(I)
    // continues forever, for in(I) and for the lex ideal alike.
    if (d >= 1 && d - 1 >= h.generator_degree && !fresh) {
      return LexSegment{Ideal(ring, std::move(generators)), bound, d - 1};
    }
    previous = std::move(segment);
  }
  throw CertificationFailure("lexseg-cap", "lex-segment generators not certified up to degree " +
                                               std::to_string(cap) + "; increase cap");
}

HomogenizedIdeal homogenize_ideal_w(const Ideal& ideal, const Weight& w, const MonomialOrder& tie) {
  auto ring_t = ideal.ring()->with_variable_appended("t");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::weighted(w, tie)).elements)
    gens.push_back(homogenize_w(g, w, ring_t));
  return HomogenizedIdeal{ideal, w, ring_t, std::move(gens)};
}

Ideal specialize_t(const HomogenizedIdeal& h, const Scalar& a) {
  std::vector<Polynomial> gens;
  const auto t_index = h.ring->nvars() - 1;
  for (const auto& g : h.generators) gens.push_back(specialize_variable(g, t_index, a, h.base.ring()));
  return Ideal(h.base.ring(), std::move(gens));
}

}  // namespace gencirc
