#include <gtest/gtest.h>

#include "hiero/error.hpp"
#include "hiero/groebner.hpp"
#include "oracles.hpp"

using namespace hiero;
using hiero::testing::random_homogeneous_ideal;

namespace {

Polynomial P(std::size_t n, std::vector<std::pair<Rational, std::vector<int>>> terms) {
  std::vector<Term> ts;
  for (auto& [c, e] : terms) ts.push_back({c, Monomial(std::move(e))});
  return Polynomial(n, std::move(ts));
}

void expect_reduced_groebner(const TermOrder& ord, const Ideal& I, const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
      EXPECT_TRUE(normal_form(ord, s_polynomial(ord, gb.elements[i], gb.elements[j]), gb.elements).is_zero());
  for (const Polynomial& f : I.gens) EXPECT_TRUE(normal_form(ord, f, gb.elements).is_zero());
  const auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    EXPECT_EQ(leading_term(ord, gb.elements[i]).coeff, 1);
    if (i > 0) {
      EXPECT_EQ(ord.compare(lms[i - 1], lms[i]), Cmp::Greater);
    }
    for (const Term& t : gb.elements[i].terms())
      for (std::size_t j = 0; j < lms.size(); ++j) {
        if (j != i) {
          EXPECT_FALSE(mono_divides(lms[j], t.mono));
        }
      }
  }
}

}  // namespace

TEST(Groebner, TextbookGrevlexExample) {
  // <x^3 - 2xy, x^2 y - 2y^2 + x> has reduced basis {x^2, xy, y^2 - x/2}
  Ideal I{Ring::from_names({"x", "y"}),
          {P(2, {{1, {3, 0}}, {-2, {1, 1}}}), P(2, {{1, {2, 1}}, {-2, {0, 2}}, {1, {1, 0}}})}};
  const auto ord = TermOrder::grevlex(2);
  const GroebnerBasis gb = buchberger(ord, I);
  ASSERT_EQ(gb.elements.size(), 3u);
  EXPECT_EQ(gb.elements[0], P(2, {{1, {2, 0}}}));
  EXPECT_EQ(gb.elements[1], P(2, {{1, {1, 1}}}));
  EXPECT_EQ(gb.elements[2], P(2, {{1, {0, 2}}, {Rational(-1, 2), {1, 0}}}));
  expect_reduced_groebner(ord, I, gb);
}

TEST(Groebner, TwistedCubicLex) {
  // <y - x^2, z - x^3> under lex y > z > x
  Ideal I{Ring::from_names({"x", "y", "z"}), {P(3, {{1, {0, 1, 0}}, {-1, {2, 0, 0}}}), P(3, {{1, {0, 0, 1}}, {-1, {3, 0, 0}}})}};
  const TermOrder ord(OrderKind::Lex, {1, 2, 0});
  const GroebnerBasis gb = buchberger(ord, I);
  expect_reduced_groebner(ord, I, gb);
  EXPECT_EQ(gb.elements.size(), 2u);
}

TEST(Groebner, UnitIdeal) {
  Ideal I{Ring::from_names({"x"}), {P(1, {{1, {1}}, {-1, {0}}}), P(1, {{1, {1}}})}};
  const GroebnerBasis gb = buchberger(TermOrder::lex(1), I);
  EXPECT_TRUE(gb.is_unit());
  try {
    (void)initial_ideal(TermOrder::lex(1), I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContainsUnit);
  }
}

TEST(Groebner, ZeroIdealHasEmptyBasis) {
  Ideal I{Ring::from_names({"x", "y"}), {Polynomial(2)}};
  EXPECT_TRUE(buchberger(TermOrder::lex(2), I).elements.empty());
  EXPECT_TRUE(initial_ideal(TermOrder::lex(2), I).is_zero());
}

TEST(Groebner, RandomIdealsSatisfyBuchbergerCriterion) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const Ideal I = random_homogeneous_ideal(rng, 3 + trial % 2, 3);
    for (const TermOrder& ord : {TermOrder::lex(I.ring.size()), TermOrder::grevlex(I.ring.size())}) {
      BuchbergerStats stats;
      const GroebnerBasis gb = buchberger(ord, I, &stats);
      expect_reduced_groebner(ord, I, gb);
      EXPECT_GE(stats.pairs_created, stats.pairs_reduced);
    }
  }
}

TEST(Groebner, HilbertFunctionOfInitialIdealMatchesLinearAlgebra) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Ideal I = random_homogeneous_ideal(rng, 3, 3);
    const auto expected = hiero::testing::hilbert_function_linear_algebra(I, 6);
    for (const TermOrder& ord : {TermOrder::lex(3), TermOrder::grevlex(3)}) {
      const GroebnerBasis gb = buchberger(ord, I);
      if (gb.is_unit()) continue;
      EXPECT_EQ(hilbert_function_oracle(initial_ideal(gb, I.ring), 6), expected);
    }
  }
}

TEST(Groebner, NormalFormOfMemberIsZero) {
  Ideal I{Ring::from_names({"x", "y"}), {P(2, {{1, {1, 1}}, {-1, {0, 2}}})}};
  const auto ord = TermOrder::lex(2);
  const GroebnerBasis gb = buchberger(ord, I);
  const Polynomial multiple = I.gens[0] * P(2, {{2, {3, 0}}, {5, {0, 1}}});
  EXPECT_TRUE(normal_form(ord, multiple, gb.elements).is_zero());
  EXPECT_FALSE(normal_form(ord, P(2, {{1, {1, 0}}}), gb.elements).is_zero());
}
