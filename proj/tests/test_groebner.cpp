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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "gencirc/errors.hpp"
#include "gencirc/groebner.hpp"
#include "support/suite.hpp"

namespace gencirc {
namespace {

using testing::draw;

Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const auto* g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const auto* g : gens) ps.push_back(P(r, g));
  return ps;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.to_string() < b.to_string(); });
  return v;
}

RingPtr xy() { return PolyRing::make({"x", "y"}); }

// Leading monomials of I_d under `o`, read off an echelon form of the degree-d piece with
// columns sorted by `o`.
std::set<Monomial> echelon_leaders(const Ideal& ideal, const MonomialOrder& o, std::uint32_t d) {
  auto w = graded_basis(ideal, d);
  std::vector<std::size_t> perm(w.columns());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return o.greater(w.basis()[a], w.basis()[b]); });
  std::vector<std::size_t> pivots;
  reduced_row_echelon(w.rows().select_columns(perm), &pivots);
  std::set<Monomial> out;
  for (auto p : pivots) out.insert(w.basis()[perm[p]]);
  return out;
}

TEST(NormalForm, Examples) {
  auto r = xy();
  auto lex = MonomialOrder::lex();
  EXPECT_TRUE(normal_form(P(r, "x"), I(r, {"x", "y"}).groebner_basis(lex)).is_zero());
  EXPECT_EQ(normal_form(P(r, "y^2"), I(r, {"x"}).groebner_basis(lex)), P(r, "y^2"));
  EXPECT_EQ(normal_form(P(r, "x^2 + y^2"), I(r, {"x^2 - y^2"}).groebner_basis(lex)), P(r, "2*y^2"));
}

TEST(Buchberger, Examples) {
  auto r = xy();
  auto lex = MonomialOrder::lex();
  EXPECT_EQ(sorted(I(r, {"x + y", "y"}).groebner_basis(lex).elements), sorted(Ps(r, {"x", "y"})));
  EXPECT_EQ(sorted(I(r, {"x^2 - y^2", "x*y"}).groebner_basis(lex).elements),
            sorted(Ps(r, {"x^2 - y^2", "x*y", "y^3"})));
  for (const auto& o : {lex, MonomialOrder::degrevlex(), MonomialOrder::parse("w:0,3;tie=lex")})
    EXPECT_EQ(I(r, {"3*x"}).groebner_basis(o).elements, Ps(r, {"x"}));
}

TEST(Buchberger, IndependentOfGeneratorOrder) {
  auto r = PolyRing::make({"x", "y", "z"});
  auto a = I(r, {"x^2 - y*z", "x*y - z^2", "y^3 + x*z^2"});
  auto b = I(r, {"y^3 + x*z^2", "x*y - z^2 + 0*x^2", "x^2 - y*z"});
  for (const auto& o : {MonomialOrder::lex(), MonomialOrder::degrevlex()})
    EXPECT_EQ(a.groebner_basis(o).elements, b.groebner_basis(o).elements);
}

// Checks the reduced-basis contract without reusing the algorithm: S-pairs reduce to
// zero, the basis is reduced and monic, and its leading monomials agree degree by degree
// with the linear algebra of I_d.
TEST(Buchberger, OracleOnRandomIdeals) {
  std::mt19937_64 rng(41);
  auto suite = testing::random_suite(41, 20);
  for (const auto& ideal : suite) {
    auto n = ideal.ring()->nvars();
    auto w = testing::random_weight(n, 0, 4, rng);
    for (const auto& o : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                          MonomialOrder::weighted(w, MonomialOrder::lex())}) {
      const auto& gb = ideal.groebner_basis(o);
      std::vector<Monomial> leads;
      for (const auto& g : gb.elements) {
        auto lt = leading_term(g, o);
        EXPECT_TRUE(lt.coefficient.is_one());
        leads.push_back(lt.monomial);
      }
      for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = 0; j < gb.elements.size(); ++j)
          if (i != j)
            for (const auto& t : gb.elements[j].terms()) EXPECT_FALSE(leads[i].divides(t.monomial)) << o.to_string();
      for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
          auto l = lcm(leads[i], leads[j]);
          auto one = Scalar::one(ideal.ring()->field());
          auto s = gb.elements[i].times_term(l.quotient(leads[i]), one) -
                   gb.elements[j].times_term(l.quotient(leads[j]), one);
          EXPECT_TRUE(normal_form(s, gb).is_zero());
        }
      for (const auto& g : ideal.generators()) EXPECT_TRUE(normal_form(g, gb).is_zero());
      for (std::uint32_t d = 0; d <= gb.max_degree() + 1; ++d) {
        std::set<Monomial> divisible;
        for (const auto& m : monomials_of_degree(n, d))
          if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
            divisible.insert(m);
        EXPECT_EQ(echelon_leaders(ideal, o, d), divisible) << o.to_string() << " degree " << d;
      }
    }
  }
}

TEST(Buchberger, ConcurrentCacheUse) {
  auto r = PolyRing::make({"x", "y", "z"});
  auto ideal = I(r, {"x^2 - y*z", "x*y - z^2", "y^3 + x*z^2"});
  std::vector<std::thread> threads;
  std::vector<std::vector<Polynomial>> results(8);
  for (std::size_t t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { results[t] = ideal.groebner_basis(MonomialOrder::lex()).elements; });
  for (auto& t : threads) t.join();
  for (const auto& res : results) EXPECT_EQ(res, results.front());
}

TEST(InitialIdeal, Examples) {
  auto r = xy();
  auto lex = MonomialOrder::lex();
  EXPECT_TRUE(ideal_equal(initial_ideal(I(r, {"x + y", "y"}), lex), I(r, {"x", "y"})));
  auto mono = I(r, {"x^3", "x*y^2"});
  EXPECT_TRUE(ideal_equal(initial_ideal(mono, MonomialOrder::degrevlex()), mono));
  EXPECT_TRUE(ideal_equal(initial_ideal(I(r, {"x^2 - y^2", "x*y"}), lex), I(r, {"x^2", "x*y", "y^3"})));
}

TEST(InitialIdealW, Examples) {
  auto r = xy();
  auto f = I(r, {"x^2 + x*y + y^2"});
  EXPECT_TRUE(ideal_equal(initial_ideal_w(f, Weight({2, 1})), I(r, {"x^2"})));
  EXPECT_TRUE(ideal_equal(initial_ideal_w(f, Weight({1, 1})), f));
  EXPECT_TRUE(ideal_equal(initial_ideal_w(I(r, {"x + y"}), Weight({1, 0})), I(r, {"x"})));
}

TEST(InitialIdealW, NotMonomialInGeneral) {
  auto r = PolyRing::make({"x", "y", "z"});
  auto in = initial_ideal_w(I(r, {"x*y + x*z + y^2"}), Weight({1, 1, 0}));
  EXPECT_TRUE(ideal_equal(in, I(r, {"x*y + y^2"})));
}

TEST(IdealEqual, Examples) {
  auto r = xy();
  EXPECT_TRUE(ideal_equal(I(r, {"x + y", "y"}), I(r, {"x", "y"})));
  EXPECT_FALSE(ideal_equal(I(r, {"x + y", "x^2", "x*y", "y^2"}), I(r, {"x - y", "x^2", "x*y", "y^2"})));
  EXPECT_FALSE(ideal_equal(I(r, {"x"}), I(r, {"x^2"})));
  EXPECT_EQ(fingerprint(I(r, {"2*x + 2*y", "y"})), "y; x");
}

TEST(Hilbert, Examples) {
  auto r = xy();
  auto h = hilbert_function(I(r, {"x^2", "x*y", "y^2"}), 4);
  EXPECT_EQ((std::vector<std::size_t>{h.quotient_dim(0), h.quotient_dim(1), h.quotient_dim(2), h.quotient_dim(3)}),
            (std::vector<std::size_t>{1, 2, 0, 0}));
  EXPECT_EQ(hilbert_function(I(r, {"x*y"}), 5).ideal_dims, (std::vector<std::size_t>{0, 0, 1, 2, 3, 4}));
  EXPECT_EQ(hilbert_function(Ideal(r, {}), 3).ideal_dims, (std::vector<std::size_t>{0, 0, 0, 0}));
}

TEST(Hilbert, MatchesLinearAlgebra) {
  for (const auto& ideal : testing::random_suite(42, 10)) {
    auto h = hilbert_function(ideal, 5);
    for (std::uint32_t d = 0; d <= 5; ++d) EXPECT_EQ(h.ideal_dims[d], graded_basis(ideal, d).dim());
  }
}

TEST(LexSegment, Examples) {
  auto r = xy();
  auto from = [&](const Ideal& ideal) {
    auto cap = default_lex_cap(ideal);
    return lex_segment(hilbert_function(ideal, cap), r, cap);
  };
  auto a = from(I(r, {"x*y"}));
  EXPECT_TRUE(ideal_equal(a.ideal, I(r, {"x^2"})));
  EXPECT_EQ(a.bound, 2u);
  auto b = from(I(r, {"x^2", "x*y"}));
  EXPECT_TRUE(ideal_equal(b.ideal, I(r, {"x^2", "x*y"})));
  EXPECT_EQ(b.bound, 2u);
  auto c = from(Ideal(r, {}));
  EXPECT_TRUE(c.ideal.is_zero());
  EXPECT_EQ(c.bound, 0u);
}

TEST(LexSegment, KnownBoundInThreeVariables) {
  // Two quadrics meeting in 4 points: dim I_d = 0,0,2,6,11,17,... Lex segments of those
  // sizes give x^2, x*y in degree 2, the new x*z^2 in degree 3, the new y^4 in degree 4.
  auto r = PolyRing::make({"x", "y", "z"});
  auto ideal = I(r, {"x^2 + y*z", "y^2 + x*z"});
  auto h = hilbert_function(ideal, 10);
  auto lex = lex_segment(h, r, 10);
  EXPECT_TRUE(ideal_equal(lex.ideal, I(r, {"x^2", "x*y", "x*z^2", "y^4"})));
  EXPECT_EQ(lex.bound, 4u);
  EXPECT_EQ(hilbert_function(lex.ideal, 10).ideal_dims, h.ideal_dims);
}

TEST(LexSegment, RejectsImpossibleHilbertData) {
  auto r = xy();
  HilbertData h;
  h.ideal_dims = {0, 1, 1, 4};
  h.ambient_dims = {1, 2, 3, 4};
  EXPECT_THROW(lex_segment(h, r, 3), MacaulayViolation);
}

TEST(LexSegment, ReportsSmallCap) {
  auto r = PolyRing::make({"x", "y", "z"});
  auto ideal = I(r, {"x^3 + z^3", "x^2*z + y*z^2"});
  auto h = hilbert_function(ideal, 6);
  try {
    lex_segment(h, r, 6);
    FAIL() << "expected a cap failure";
  } catch (const CertificationFailure& e) {
    EXPECT_EQ(e.reason(), "lexseg-cap");
  }
}

TEST(FlatFamily, Examples) {
  auto r = xy();
  auto q = FieldSpec::rationals();
  auto ideal = I(r, {"x^2 + x*y"});
  auto h = homogenize_ideal_w(ideal, Weight({1, 0}));
  ASSERT_EQ(h.generators.size(), 1u);
  EXPECT_EQ(h.generators[0], P(h.ring, "x^2 + t*x*y"));
  EXPECT_TRUE(ideal_equal(specialize_t(h, Scalar::zero(q)), I(r, {"x^2"})));
  EXPECT_TRUE(ideal_equal(specialize_t(h, Scalar(2L, q)), I(r, {"x^2 + 2*x*y"})));
  EXPECT_TRUE(ideal_equal(specialize_t(h, Scalar(2L, q)),
                          transform(Substitution::diagonal_scaling(r, Weight({1, 0}), Scalar(2L, q)), ideal)));
  EXPECT_TRUE(ideal_equal(specialize_t(h, Scalar::one(q)), ideal));
}

TEST(FlatFamily, RandomParameters) {
  std::mt19937_64 rng(43);
  for (const auto& ideal : testing::random_suite(43, 10)) {
    const auto& field = ideal.ring()->field();
    auto w = testing::random_weight(ideal.ring()->nvars(), -2, 4, rng);
    auto h = homogenize_ideal_w(ideal, w);
    long a = 0;
    while (a == 0) a = draw(rng, -7, 7);
    Scalar s(a, field);
    EXPECT_TRUE(ideal_equal(specialize_t(h, s), transform(Substitution::diagonal_scaling(ideal.ring(), w, s), ideal)));
  }
}

TEST(Ideal, RejectsNonHomogeneous) {
  auto r = xy();
  EXPECT_THROW(I(r, {"x^2 + y"}), std::invalid_argument);
  EXPECT_TRUE(I(r, {"0"}).is_zero());
}

TEST(WeightEquivalence, EqualInitialFormsGiveEqualInitialIdeals) {
  std::mt19937_64 rng(44);
  for (const auto& ideal : testing::random_suite(44, 10)) {
    auto n = ideal.ring()->nvars();
    for (int k = 0; k < 10; ++k) {
      auto w = testing::random_weight(n, 0, 2, rng);
      auto w2 = testing::random_weight(n, 0, 2, rng);
      bool same = true;
      for (const auto& f : ideal.groebner_basis(MonomialOrder::weighted(w, MonomialOrder::degrevlex())).elements)
        same = same && initial_form_w(f, w).support() == initial_form_w(f, w2).support();
      if (same) EXPECT_TRUE(ideal_equal(initial_ideal_w(ideal, w), initial_ideal_w(ideal, w2)));
    }
  }
}

}  // namespace
}  // namespace gencirc
