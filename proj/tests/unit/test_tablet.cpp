#include <gtest/gtest.h>

#include "hiero/error.hpp"
#include "hiero/tablet.hpp"
#include "hiero/zoo.hpp"
#include "oracles.hpp"

using namespace hiero;

namespace {

Tablet run(const Problem& p) { return build_tablet(p.ideal, p.order, p.grading); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Tablet, RankOneRendering) {
  const Tablet t = run(fixture("ex1.2"));
  EXPECT_EQ(render_tablet(t.hieroglyphs, t.ring, RenderMode::Ascii),
            "++.  ++.  ++.  +..  +..  ...\n"
            "++.  +..  ...  +.+  ..+  .++\n"
            "...  ..+  .++  ..+  .++  .++\n");
}

TEST(Tablet, CopiesRenderCircled) {
  const Tablet t = run(fixture("ex1.3"));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(render_hieroglyph(t.hieroglyphs[3], t.ring, RenderMode::Unicode),
            "·⊕+\n"
            " ·⊕\n"
            "  ·\n");
  EXPECT_EQ(render_hieroglyph(t.hieroglyphs[3], t.ring, RenderMode::Ascii),
            ".@+\n"
            " .@\n"
            "  .\n");
}

TEST(Tablet, TwoPanes) {
  const Tablet t = run(fixture("commuting2"));
  EXPECT_EQ(render_tablet(t.hieroglyphs, t.ring, RenderMode::Ascii),
            ".+ ..  .. +.  .. ++\n"
            "+. ..  +. ..  .. ..\n");
}

TEST(Tablet, WeightedSumEqualsMultidegree) {
  // x_ij gets e_i + e_{n+j}: minors are homogeneous, every weight has total 2
  for (const char* name : {"ex1.2", "ex3.3", "ex3.6-1324", "ex3.6-4321"}) {
    const Problem p = fixture(name);
    const std::size_t n = p.ideal.ring.size();
    int size = 0;
    for (const Variable& v : p.ideal.ring.variables()) size = std::max({size, v.grid->row, v.grid->col});
    std::vector<std::vector<int>> w(n, std::vector<int>(static_cast<std::size_t>(2 * size), 0));
    for (std::size_t i = 0; i < n; ++i) {
      const GridCell c = *p.ideal.ring.var(static_cast<int>(i)).grid;
      w[i][static_cast<std::size_t>(c.row - 1)] = 1;
      w[i][static_cast<std::size_t>(size + c.col - 1)] = 1;
    }
    const Tablet t = build_tablet(p.ideal, p.order, Grading(static_cast<std::size_t>(2 * size), w));
    EXPECT_EQ(to_string(tablet_multidegree(t)), to_string(t.multidegree)) << name;
  }
}

TEST(Tablet, UnitWeightsGiveMonomials) {
  // row grading x_ij -> t_i on <x11, x12> in a 1x2 matrix: the tablet is {x11, x12}, mdeg t1^2
  const MonomialIdeal J(generic_matrix_ring(1, 2), {Monomial(std::vector<int>{1, 0}), Monomial(std::vector<int>{0, 1})});
  const Tablet t = tablet_from_initial(J, TermOrder::lex(2), Grading(1, {{1}, {1}}));
  EXPECT_EQ(tablet_multidegree(t), LaurentPoly::monomial({2}, 1));
  EXPECT_EQ(t.multidegree, LaurentPoly::monomial({2}, 1));
}

TEST(Tablet, ZeroIdealHasOneEmptyHieroglyph) {
  const MonomialIdeal J(Ring::from_names({"x", "y"}), {});
  const Tablet t = tablet_from_initial(J, TermOrder::lex(2), Grading::standard(2));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.hieroglyphs[0].marks.empty());
  EXPECT_EQ(t.degree, 1);
}

TEST(Tablet, Errors) {
  const Problem p = fixture("ex1.2");
  Ideal bad = p.ideal;
  // x11 + x12^2
  bad.gens.push_back(Polynomial::variable(9, 0) + Polynomial::from_monomial(Monomial::variable(9, 1, 2)));
  EXPECT_EQ(code_of([&] { (void)build_tablet(bad, p.order, p.grading); }), ErrorCode::NotHomogeneous);

  const MonomialIdeal J(Ring::from_names({"x", "y"}), {Monomial(std::vector<int>{1, 1})});
  const Tablet t = tablet_from_initial(J, TermOrder::lex(2), Grading::standard(2));
  EXPECT_EQ(code_of([&] { (void)render_tablet(t.hieroglyphs, t.ring, RenderMode::Ascii); }),
            ErrorCode::MissingGridMetadata);
  const Tablet u = tablet_from_initial(J, TermOrder::lex(2), Grading(1, {{1}, {2}}));
  EXPECT_EQ(code_of([&] { (void)tablet_multidegree(u); }), ErrorCode::UnequalTotalDegrees);
}

TEST(Tablet, JsonRoundTrip) {
  for (const char* name : {"ex1.3", "commuting2", "ex2.6"}) {
    const Tablet t = run(fixture(name));
    const std::string text = tablet_to_json(t);
    const Tablet back = tablet_from_json(text);
    EXPECT_EQ(back.ring, t.ring);
    EXPECT_EQ(back.order, t.order);
    EXPECT_EQ(back.hieroglyphs, t.hieroglyphs);
    EXPECT_EQ(back.all_components, t.all_components);
    EXPECT_EQ(back.equidimensional, t.equidimensional);
    EXPECT_EQ(back.degree, t.degree);
    EXPECT_EQ(back.multidegree, t.multidegree);
    EXPECT_EQ(tablet_to_json(back), text);
  }
}

TEST(Tablet, SizeEqualsDegreeOnRandomIdeals) {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 40; ++trial) {
    const Ideal I = hiero::testing::random_homogeneous_ideal(rng, 3 + trial % 2, 3);
    const Grading g = Grading::standard(I.ring.size());
    const Tablet t = build_tablet(I, TermOrder::grevlex(I.ring.size()), g);
    EXPECT_EQ(static_cast<std::int64_t>(t.size()), t.degree);
  }
}
