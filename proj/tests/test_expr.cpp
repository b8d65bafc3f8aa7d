#include "rearrange/bracket.hpp"
#include "rearrange/errors.hpp"
#include "rearrange/rational.hpp"
#include "rearrange/spectral_expr.hpp"

#include <gtest/gtest.h>

using namespace rearrange;

TEST(Rational, FormatsAndParses) {
  EXPECT_EQ(format_fraction(Rational(3)), "3/1");
  EXPECT_EQ(format_fraction(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(format_rational(Rational(6, 3)), "2");
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a/2"), ParseError);
}

TEST(BracketTerm, ValidatesSlots) {
  EXPECT_NO_THROW(BracketTerm("f", 2, {{0, 1}, {2}}));
  EXPECT_THROW(BracketTerm("f", 2, {{0, 1}, {}}), ArityError);
  EXPECT_THROW(BracketTerm("f", 2, {{0, 3}, {2}}), ArityError);
  // x1 missing
  EXPECT_THROW(BracketTerm("f", 2, {{0}, {2}}), ArityError);
}

TEST(BracketTerm, PrintsBracketNotation) {
  EXPECT_EQ(to_string(generic_term(2)), "f([x0],[x1],[x2])");
  EXPECT_EQ(to_string(BracketTerm("f", 2, {{0, 1}, {2}})), "f([x0,x1],[x2])");
  EXPECT_EQ(to_string(BracketTerm("T", 1, {{0, 0}, {1}})), "T([x0,x0],[x1])");
}

TEST(BracketTerm, CanonicalizeSortsSlots) {
  BracketTerm t("f", 2, {{2, 0}, {1}});
  EXPECT_FALSE(t.is_canonical());
  auto c = canonicalize(t);
  EXPECT_TRUE(c.is_canonical());
  EXPECT_EQ(c.slot(0), (Slot{0, 2}));
  EXPECT_EQ(canonicalize(c), c);
  EXPECT_EQ(c.occurrences(0), 1);
}

TEST(BracketTerm, SimplicialShadow) {
  auto s = to_simplicial_shadow(BracketTerm("f", 3, {{0, 1}, {2, 2, 3}}));
  EXPECT_EQ(s.psi, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(s.derivative_orders, (std::vector<int>{0, 1}));
  EXPECT_EQ(s.stationary_points(), (std::vector<int>{0, 1}));
  EXPECT_THROW(to_simplicial_shadow(BracketTerm("f", 2, {{0, 2}, {1}})), std::invalid_argument);
  EXPECT_THROW(to_simplicial_shadow(BracketTerm("f", 1, {{0, 1}, {1}})), std::invalid_argument);
}

TEST(SpectralExpr, CombinesLikeTerms) {
  SpectralExpr e("f", 2, 2);
  e.add(BracketTerm("f", 2, {{1, 0}, {2}}), Rational(1, 2));
  e.add(BracketTerm("f", 2, {{0, 1}, {2}}), Rational(1, 2));
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e.coefficient(BracketTerm("f", 2, {{0, 1}, {2}})), Rational(1));
  e.add(BracketTerm("f", 2, {{0, 1}, {2}}), Rational(-1));
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(to_string(e), "0");
}

TEST(SpectralExpr, RejectsMismatchedShapes) {
  SpectralExpr e("f", 2, 2);
  EXPECT_THROW(e.add(generic_term(2), 1), ArityError);
  EXPECT_THROW((void)(SpectralExpr::generic(1) + SpectralExpr::generic(2)), ArityError);
}

TEST(SpectralExpr, Printing) {
  SpectralExpr e("f", 2, 2);
  e.add(BracketTerm("f", 2, {{0, 1}, {2}}), 1);
  e.add(BracketTerm("f", 2, {{0}, {1, 2}}), Rational(-1, 2));
  EXPECT_EQ(to_string(e), "-1/2*f([x0],[x1,x2]) + f([x0,x1],[x2])");
}

TEST(SpectralExpr, JsonRoundTrip) {
  SpectralExpr e("T", 2, 2);
  e.add(BracketTerm("T", 2, {{0, 2}, {1}}), Rational(-3, 7));
  e.add(BracketTerm("T", 2, {{0}, {1, 2}}), 2);
  auto j = to_json(e);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["symbol"], "T");
  EXPECT_EQ(spectral_expr_from_json(j), e);
  EXPECT_FALSE(to_json(SpectralExpr::generic(1)).contains("symbol"));
}
