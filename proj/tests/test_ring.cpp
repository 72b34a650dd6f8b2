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

#include "gencirc/errors.hpp"
#include "gencirc/ring.hpp"
#include "support/suite.hpp"

namespace gencirc {
namespace {

using testing::draw;

RingPtr xy(FieldSpec f = FieldSpec::rationals()) { return PolyRing::make({"x", "y"}, f); }

Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

Matrix matrix(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(0, rows.begin()->size(), f);
  for (const auto& row : rows) {
    std::vector<Scalar> v;
    for (long e : row) v.emplace_back(e, f);
    m.append_row(v);
  }
  return m;
}

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng) {
  Polynomial f(r);
  for (std::uint32_t d = 0; d <= 3; ++d)
    if (draw(rng, 0, 1)) f += testing::random_homogeneous(r, d, static_cast<std::size_t>(draw(rng, 1, 3)), 7, rng);
  return f;
}

TEST(Field, ParsesSelectors) {
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("GF(7)"), FieldSpec::prime(7));
  EXPECT_EQ(FieldSpec::parse("gf:32003").modulus(), kDefaultPrime);
  EXPECT_THROW(FieldSpec::parse("GF(8)"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
}

TEST(Scalar, RationalsStayReduced) {
  auto q = FieldSpec::rationals();
  Scalar a(mpq_class(6, 4), q);
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_EQ((a * Scalar(2L, q)).to_string(), "3");
  EXPECT_EQ(Scalar(2L, q).pow(-2).to_string(), "1/4");
  EXPECT_THROW(Scalar::zero(q).inverse(), std::domain_error);
}

TEST(Scalar, PrimeFieldArithmetic) {
  auto f = FieldSpec::prime(7);
  EXPECT_EQ(Scalar(-1L, f).residue(), 6u);
  EXPECT_TRUE((Scalar(3L, f) * Scalar(5L, f)).is_one());
  EXPECT_EQ(Scalar(mpq_class(1, 2), f).residue(), 4u);
  EXPECT_THROW(Scalar(mpq_class(1, 7), f), std::domain_error);
  EXPECT_THROW(Scalar(1L, f) + Scalar(1L, FieldSpec::prime(5)), std::invalid_argument);
}

TEST(Polynomial, Arithmetic) {
  auto r = xy();
  EXPECT_EQ(P(r, "x + y") + P(r, "-y"), P(r, "x"));
  EXPECT_EQ(P(r, "x + y") * P(r, "x - y"), P(r, "x^2 - y^2"));
  auto r3 = xy(FieldSpec::prime(3));
  EXPECT_TRUE((P(r3, "2*x") + P(r3, "x")).is_zero());
  EXPECT_THROW(P(r, "x") + P(r3, "x"), std::invalid_argument);
}

TEST(Polynomial, TextFormat) {
  auto r = PolyRing::make({"x", "y", "z"});
  auto f = P(r, "x^2*y - 3/2*z^3");
  EXPECT_EQ(f.to_string(), "x^2*y - 3/2*z^3");
  EXPECT_EQ(P(r, "0").to_string(), "0");
  EXPECT_EQ(P(r, " - 2 + x*x").to_string(), "x^2 - 2");
  EXPECT_EQ(P(xy(FieldSpec::prime(5)), "-x").to_string(), "4*x");
  EXPECT_THROW(P(r, "x^"), ParseError);
  EXPECT_THROW(P(r, "w"), ParseError);
  EXPECT_THROW(P(r, "x/0"), ParseError);
}

TEST(Polynomial, ParseOfPrintIsIdentity) {
  std::mt19937_64 rng(11);
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    auto r = PolyRing::make({"a", "b2", "c"}, field);
    for (int k = 0; k < 200; ++k) {
      auto f = random_poly(r, rng) * Scalar(mpq_class(draw(rng, 1, 9), draw(rng, 1, 9)), field);
      EXPECT_EQ(P(r, f.to_string().c_str()), f) << f.to_string();
    }
  }
}

TEST(Substitution, Examples) {
  auto q = FieldSpec::rationals();
  auto r = xy();
  Substitution shear(r, matrix(q, {{1, 1}, {0, 1}}), Substitution::Action::row);
  EXPECT_EQ(shear.apply(P(r, "x^2")), P(r, "x^2 + 2*x*y + y^2"));
  Substitution m(r, matrix(q, {{1, 2}, {3, 4}}), Substitution::Action::row);
  EXPECT_EQ(m.apply(P(r, "x + y")), P(r, "4*x + 6*y"));
  auto d = Substitution::diagonal_scaling(r, Weight({1, 0}), Scalar(2L, q));
  EXPECT_EQ(d.apply(P(r, "x*y")), P(r, "1/2*x*y"));
  EXPECT_THROW(Substitution(r, matrix(q, {{1, 2}, {2, 4}}), Substitution::Action::row), std::invalid_argument);
}

TEST(Substitution, ColumnConvention) {
  auto q = FieldSpec::rationals();
  auto r = xy();
  Substitution s(r, matrix(q, {{1, 5}, {0, 1}}), Substitution::Action::column);
  EXPECT_EQ(s.image_of_variable(0), P(r, "x"));
  EXPECT_EQ(s.image_of_variable(1), P(r, "5*x + y"));
}

TEST(Substitution, InverseUndoes) {
  std::mt19937_64 rng(12);
  auto q = FieldSpec::rationals();
  auto r = PolyRing::make({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Matrix m(3, 3, q);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Scalar(draw(rng, -5, 5), q);
    if (determinant(m).is_zero()) continue;
    auto action = k % 2 ? Substitution::Action::row : Substitution::Action::column;
    Substitution s(r, m, action);
    auto f = random_poly(r, rng);
    EXPECT_EQ(s.inverse().apply(s.apply(f)), f);
  }
}

TEST(Substitution, PreservesHomogeneity) {
  auto q = FieldSpec::rationals();
  auto r = xy();
  Substitution s(r, matrix(q, {{2, -1}, {3, 7}}), Substitution::Action::row);
  auto g = s.apply(P(r, "x^3 - 4*x*y^2"));
  EXPECT_TRUE(g.is_homogeneous());
  EXPECT_EQ(g.degree(), 3u);
}

TEST(Weight, ValueAndParsing) {
  auto m = Monomial(std::vector<std::uint32_t>{2, 1});
  EXPECT_EQ(weight_value(m, Weight({2, 1})), 5);
  EXPECT_EQ(weight_value(m, Weight({0, 0})), 0);
  EXPECT_EQ(weight_value(Monomial(std::vector<std::uint32_t>{1, 1}), Weight({1, -1})), 0);
  EXPECT_EQ(Weight::parse("1/2,1").entries(), (std::vector<long>{1, 2}));
  EXPECT_EQ(Weight::parse("2, 1, 0").to_string(), "2,1,0");
  EXPECT_THROW(weight_value(m, Weight({1, 1, 1})), std::invalid_argument);
}

TEST(InitialForm, Examples) {
  auto r = xy();
  auto f = P(r, "x^2 + x*y + y^2");
  EXPECT_EQ(initial_form_w(f, Weight({2, 1})), P(r, "x^2"));
  EXPECT_EQ(initial_form_w(f, Weight({1, 1})), f);
  EXPECT_EQ(initial_form_w(P(r, "x + y"), Weight({1, 1})), P(r, "x + y"));
  EXPECT_THROW(initial_form_w(Polynomial(r), Weight({1, 1})), std::invalid_argument);
}

TEST(Homogenize, Examples) {
  auto r = xy();
  auto f = P(r, "x^2 + x*y");
  auto ft = homogenize_w(f, Weight({1, 0}));
  EXPECT_EQ(ft, P(ft.ring(), "x^2 + t*x*y"));
  auto g = P(r, "x^2 + y^2");
  EXPECT_EQ(homogenize_w(g, Weight({1, 1})), P(ft.ring(), "x^2 + y^2"));
  auto q = FieldSpec::rationals();
  EXPECT_EQ(specialize_variable(ft, 2, Scalar::zero(q), r), P(r, "x^2"));
}

TEST(Homogenize, SpecializationsRecoverInputAndInitialForm) {
  std::mt19937_64 rng(13);
  auto q = FieldSpec::rationals();
  auto r = PolyRing::make({"x", "y", "z"});
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(r, rng);
    if (f.is_zero()) continue;
    auto w = testing::random_weight(3, -4, 4, rng);
    auto ft = homogenize_w(f, w);
    EXPECT_EQ(specialize_variable(ft, 3, Scalar::one(q), r), f);
    EXPECT_EQ(specialize_variable(ft, 3, Scalar::zero(q), r), initial_form_w(f, w));
  }
}

TEST(InitialForm, ShiftByAllOnesIsHarmless) {
  std::mt19937_64 rng(14);
  auto r = PolyRing::make({"x", "y", "z"});
  for (int k = 0; k < 100; ++k) {
    auto f = testing::random_homogeneous(r, static_cast<std::uint32_t>(draw(rng, 1, 4)), 4, 9, rng);
    auto w = testing::random_weight(3, -3, 3, rng);
    long c = draw(rng, -5, 5);
    std::vector<long> shifted = w.entries();
    for (auto& e : shifted) e += c;
    if (std::all_of(shifted.begin(), shifted.end(), [](long e) { return e == 0; })) continue;
    EXPECT_EQ(initial_form_w(f, Weight(shifted)), initial_form_w(f, w));
  }
}

TEST(Ring, RejectsBadNames) {
  EXPECT_THROW(PolyRing::make({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(PolyRing::make({}), std::invalid_argument);
  EXPECT_THROW(PolyRing::make({"1x"}), std::invalid_argument);
  auto r = xy();
  EXPECT_EQ(r->with_variable_appended("x")->names().back(), "x_");
}

}  // namespace
}  // namespace gencirc
