#include "rearrange/errors.hpp"
#include "rearrange/numeval.hpp"
#include "rearrange/ops.hpp"
#include "rearrange/oracle.hpp"
#include "rearrange/soundness.hpp"

#include <gtest/gtest.h>

using namespace rearrange;
using G = Generator;

namespace {

SpectralExpr term(int arity, std::vector<Slot> slots, const std::string& sym = "f") {
  return SpectralExpr::of(BracketTerm(sym, arity, std::move(slots)));
}

std::string show(const OperatorWord& w, int n) { return to_string(apply_word(w, SpectralExpr::generic(n))); }

}  // namespace

TEST(Face, OnGenericSymbol) {
  auto f1 = SpectralExpr::generic(1);
  EXPECT_EQ(to_string(face(0, f1)), "f([x0,x1],[x2])");
  EXPECT_EQ(to_string(face(1, f1)), "f([x0],[x1,x2])");
  EXPECT_EQ(to_string(last_face(f1)), "f([x0,x2],[x1])");
  EXPECT_EQ(face(0, SpectralExpr::generic(0)), term(1, {{0, 1}}));
}

TEST(Face, GeneralizedLeibnizOnRepeatedVariables) {
  auto e = term(2, {{0, 1}, {2}});
  EXPECT_EQ(to_string(face(1, e)), "f([x0,x1,x2],[x3])");
  EXPECT_EQ(to_string(face(2, e)), "f([x0,x1],[x2,x3])");
  // x0 twice in one slot: f[x0,x0] -> f[x0,x0,x1] + f[x0,x1,x1]
  auto d = term(0, {{0, 0}});
  EXPECT_EQ(to_string(face(0, d)), "f([x0,x0,x1]) + f([x0,x1,x1])");
  // x1 in two slots: the copies before the chosen one keep x1, later ones become x2
  auto s = term(1, {{0, 1}, {1}});
  EXPECT_EQ(to_string(face(1, s)), "f([x0,x1],[x1,x2]) + f([x0,x1,x2],[x2])");
}

TEST(Degeneracy, IdentifiesNeighbours) {
  auto f2 = SpectralExpr::generic(2);
  EXPECT_EQ(to_string(degeneracy(0, f2)), "f([x0],[x0],[x1])");
  EXPECT_EQ(to_string(degeneracy(1, f2)), "f([x0],[x1],[x1])");
  // extra degeneracy x_n -> x_0
  EXPECT_EQ(to_string(degeneracy(2, f2)), "f([x0],[x1],[x0])");
  EXPECT_THROW(degeneracy(3, f2), ArityError);
  EXPECT_THROW(degeneracy(0, SpectralExpr::generic(0)), ArityError);
}

TEST(Cyclic, PermutesVariables) {
  auto f2 = SpectralExpr::generic(2);
  EXPECT_EQ(to_string(cyclic(f2)), "f([x2],[x0],[x1])");
  EXPECT_EQ(cyclic_inverse(cyclic(f2)), f2);
  EXPECT_EQ(cyclic(cyclic(cyclic(f2))), f2);
  EXPECT_EQ(dual_cyclic(f2), cyclic_inverse(f2));
}

TEST(Partial, IsSigmaDelta) {
  auto f1 = SpectralExpr::generic(1);
  EXPECT_EQ(to_string(partial(0, f1)), "f([x0,x0],[x1])");
  EXPECT_EQ(partial(1, f1), degeneracy(1, face(1, f1)));
  EXPECT_EQ(show(OperatorWord::parse("s0 d0"), 1), "f([x0,x0],[x1])");
}

TEST(Duals, MatchDefinitions) {
  auto f2 = SpectralExpr::generic(2);
  EXPECT_EQ(dual_face(1, f2), degeneracy(1, f2));
  EXPECT_EQ(dual_degeneracy(0, f2), face(1, f2));
  EXPECT_EQ(dual_degeneracy(2, f2), last_face(f2));
}

TEST(OperatorWord, ParsesTokens) {
  auto w = OperatorWord::parse("  s0 d1  t t^-1 dlast p2 Dd0 Ds1 Dt ");
  ASSERT_EQ(w.letters().size(), 9u);
  EXPECT_EQ(w.letters()[0], G::degeneracy(0));
  EXPECT_EQ(w.letters()[3], G::cyclic_inverse());
  EXPECT_EQ(w.letters()[4], G::last_face());
  EXPECT_EQ(w.letters()[5], G::partial(2));
  EXPECT_EQ(w.to_string(), "s0 d1 t t^-1 dlast p2 Dd0 Ds1 Dt");
  EXPECT_TRUE(OperatorWord::parse("").empty());
}

TEST(OperatorWord, ParseErrorsCarryPosition) {
  try {
    OperatorWord::parse("d0 q1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(OperatorWord::parse("d"), ParseError);
  EXPECT_THROW(OperatorWord::parse("s-1"), ParseError);
}

TEST(OperatorWord, ArityChaining) {
  auto w = OperatorWord::parse("s0 s0 d0 d0");
  EXPECT_EQ(w.target(0), 0);
  EXPECT_THROW(OperatorWord::parse("d3").target(1), ArityError);
  EXPECT_EQ(show(OperatorWord::parse("t t t"), 2), "f([x0],[x1],[x2])");
}

// The index ranges matter: outside them the relations are false.
TEST(Relations, DocumentedCounterexamples) {
  for (int n = 1; n <= 4; ++n) {
    auto f = SpectralExpr::generic(n);
    // the last face does not commute past sigma_0 the way the regular faces do
    EXPECT_NE(degeneracy(0, last_face(f)), last_face(degeneracy(0, f))) << n;
    // tau sigma_0 = sigma_{n-1} tau^2 holds, the extra degeneracy in place of sigma_{n-1} does not
    EXPECT_EQ(cyclic(degeneracy(0, f)), degeneracy(n - 1, cyclic(cyclic(f))));
    if (n >= 2) EXPECT_NE(cyclic(degeneracy(0, f)), degeneracy(n, cyclic(cyclic(f))));
    // s_i t = t s_{i-1}; the variant with s_{i+1} fails
    EXPECT_EQ(dual_degeneracy(1, dual_cyclic(f)), dual_cyclic(dual_degeneracy(0, f)));
    if (n >= 2) EXPECT_NE(dual_degeneracy(1, dual_cyclic(f)), dual_cyclic(dual_degeneracy(2, f)));
  }
  // d_i s_n with the last face s_n is not covered by the regular table
  auto f2 = SpectralExpr::generic(2);
  EXPECT_NE(dual_face(0, dual_degeneracy(2, f2)), dual_degeneracy(1, dual_face(0, f2)));
}

TEST(Relations, TwoTermIdentities) {
  auto f = SpectralExpr::generic(2);
  EXPECT_EQ(face(0, degeneracy(0, f)), degeneracy(1, face(0, f)) + degeneracy(0, face(1, f)));
  EXPECT_EQ(degeneracy(1, face(0, f)), face(0, degeneracy(0, f)) - degeneracy(0, face(1, f)));
}

TEST(Relations, TheoremSuiteCountsAndPasses) {
  auto rep = verify_theorem_relations(6);
  EXPECT_TRUE(rep.all_hold());
  // independent enumeration in tests/oracles/frozen_values.py
  std::map<std::string, std::size_t> expected{
      {"cyc-deg", 15},       {"cyc-deg-wrap", 6},   {"cyc-face", 28},       {"cyc-order", 7},   {"deg-deg", 35},
      {"deg-face-eq", 28},   {"deg-face-gt", 35},   {"deg-face-lt", 35},    {"deg-face-pred", 21},
      {"deg-face-succ", 21}, {"face-deg-sum", 21},  {"face-face", 119},     {"last-face", 7}};
  EXPECT_EQ(rep.counts(), expected);
  EXPECT_EQ(rep.instances.size(), 378u);
}

TEST(Relations, DualSuiteCountsAndPasses) {
  auto rep = verify_dual_relations(6);
  EXPECT_TRUE(rep.all_hold());
  std::map<std::string, std::size_t> expected{
      {"dual-d0t", 6},  {"dual-dd", 55},      {"dual-ds-eq", 21}, {"dual-ds-gt", 20}, {"dual-ds-lt", 35},
      {"dual-ds-succ", 21}, {"dual-ds-succ2", 15}, {"dual-dt", 21},    {"dual-s0t", 7},    {"dual-ss", 84},
      {"dual-st", 21},  {"dual-t-order", 7}};
  EXPECT_EQ(rep.counts(), expected);
}

TEST(Relations, InstanceKeysSortable) {
  auto rep = verify_theorem_relations(1);
  EXPECT_EQ(rep.instances.front().key(), "face-face/n=00/i=00/j=01");
}

// ------------------------------------------------------------ function-level oracle

TEST(Oracle, PolynomialGeneratorsFrozen) {
  auto p = oracle::ridge_power({1, 2}, 3);  // (x0 + 2 x1)^3
  std::vector<Rational> at3{Rational(1, 2), Rational(1, 3), 2};
  std::vector<Rational> at2{Rational(1, 2), Rational(1, 3)};
  std::vector<Rational> at1{Rational(1, 2)};
  EXPECT_EQ(oracle::apply(G::face(0), p)(at3), Rational(2107, 36));
  EXPECT_EQ(oracle::apply(G::face(1), p)(at3), Rational(967, 18));
  EXPECT_EQ(oracle::apply(G::last_face(), p)(at3), Rational(139, 12));
  EXPECT_EQ(oracle::apply(G::cyclic(), p)(at2), Rational(64, 27));
  EXPECT_EQ(oracle::apply(G::partial(0), p)(at2), Rational(49, 12));
  EXPECT_EQ(oracle::apply(G::degeneracy(0), p)(at1), Rational(27, 8));
  EXPECT_EQ(oracle::apply(G::degeneracy(1), p)(at1), Rational(27, 8));
}

TEST(Oracle, FunctionRouteAgreesWithBrackets) {
  auto base = BaseFunction::ridge(BaseFunction::exponential(), {Rational(1, 3), Rational(2, 3), Rational(5, 4)});
  auto f = oracle::from_base(base);
  std::mt19937_64 rng(11);
  for (const char* text : {"d0", "d2", "dlast", "s1", "s2", "t", "t^-1", "p1", "s0 d0 s1 d2", "d1 s0 t"}) {
    auto w = OperatorWord::parse(text);
    auto expr = apply_word(w, SpectralExpr::generic(2));
    auto pts = to_complex(separated_points(expr.arity() + 1, rng));
    Complex a = oracle::apply(w, f)(pts);
    Complex b = eval_expr(expr, base, pts);
    EXPECT_LT(relative_error(a, b, eval_expr_scale(expr, base, pts)), 1e-10) << text;
  }
}

TEST(Soundness, SmallSuitesPass) {
  auto th = numeric_soundness(verify_theorem_relations(3), 5);
  EXPECT_TRUE(th.all_pass()) << th.failures();
  EXPECT_EQ(th.cases.size(), verify_theorem_relations(3).instances.size() * 3);
  auto du = numeric_soundness(verify_dual_relations(3), 6);
  EXPECT_TRUE(du.all_pass());
  EXPECT_LT(du.worst(), 1e-9);
}

TEST(Soundness, DetectsAWrongRelation) {
  RelationReport bad;
  bad.instances.push_back(make_instance("wrong", 2, 0, 0, OperatorSum::single(word({G::cyclic()})),
                                        OperatorSum::single(word({G::cyclic_inverse()}))));
  EXPECT_FALSE(bad.all_hold());
  auto s = numeric_soundness(bad, 1);
  EXPECT_FALSE(s.all_pass());
}
