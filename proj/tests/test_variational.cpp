#include "rearrange/errors.hpp"
#include "rearrange/modular.hpp"
#include "rearrange/numeval.hpp"
#include "rearrange/ops.hpp"
#include "rearrange/variational.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace rearrange;

namespace {

SpectralExpr T() { return SpectralExpr::generic(1, "T"); }

BaseFunction exp_ridge() { return BaseFunction::ridge(BaseFunction::exponential(), {Rational(1, 2), Rational(-1, 3)}); }

}  // namespace

TEST(Coefficients, ClosedForms) {
  auto c = cm_coefficients(T());
  EXPECT_EQ(c.K, -(T() + cyclic(T())));
  auto d2 = [](const SpectralExpr& e) { return last_face(e); };
  EXPECT_EQ(c.H, face(0, c.K) + face(1, c.K) - d2(c.K));
  // H = -(delta_0 + delta_1)(1 + tau) T + tau delta_0 T + tau^2 delta_1 T
  auto alt = -(face(0, T() + cyclic(T())) + face(1, T() + cyclic(T()))) + cyclic(face(0, T())) +
             cyclic(cyclic(face(1, T())));
  EXPECT_EQ(c.H, alt);
  EXPECT_THROW(cm_coefficients(SpectralExpr::generic(2)), ArityError);
}

TEST(Coefficients, PartsAddUp) {
  auto a = cm_part_factors(T()), b = cm_part_function(T());
  auto c = cm_coefficients(T());
  EXPECT_EQ(a.K + b.K, c.K);
  EXPECT_EQ(a.H + b.H, c.H);
  EXPECT_TRUE(b.K.empty());
  // varying S_h(T) alone gives the last face of the symmetrized symbol
  EXPECT_EQ(b.H, last_face(T() + cyclic(T())));
}

TEST(Pipeline, ReproducesClosedForm) {
  auto r = derive_gradient(T());
  EXPECT_EQ(r.coefficients, cm_coefficients(T()));
  EXPECT_EQ(r.functional.terms().size(), 1u);
  for (const auto& [key, f] : r.normalized.terms()) {
    ASSERT_FALSE(key.empty());
    EXPECT_TRUE(key.back().direction);
    EXPECT_EQ(key.back().order, 0);
  }
}

TEST(Gradient, FiniteDifferenceAgreement) {
  for (int d : {4, 6}) {
    auto ctx = MatrixContext::random(d, 17);
    std::mt19937_64 rng(d);
    std::vector<Matrix> dirs;
    for (int k = 0; k < 3; ++k) dirs.push_back(random_hermitian(d, rng));
    auto chk = gradient_check(T(), exp_ridge(), ctx, dirs, 1e-4);
    EXPECT_LT(chk.max_relative_error, 1e-6) << d;
  }
}

TEST(Gradient, VanishesWhenDCommutesWithH) {
  std::mt19937_64 rng(2);
  Matrix h = random_hermitian(4, rng);
  MatrixContext ctx(h, h * h);
  auto g = gradient_assemble(cm_coefficients(T()), exp_ridge(), ctx);
  EXPECT_LT(max_abs(g), 1e-12);
  EXPECT_LT(std::abs(functional_value(ctx, T(), exp_ridge())), 1e-12);
}

TEST(Gradient, LinearInT) {
  auto ctx = MatrixContext::random(4, 3);
  auto c1 = cm_coefficients(T());
  auto scaled = cm_coefficients(T() + T() + T());
  EXPECT_EQ(scaled.K, c1.K + c1.K + c1.K);
  Matrix g1 = gradient_assemble(c1, exp_ridge(), ctx), g3 = gradient_assemble(scaled, exp_ridge(), ctx);
  EXPECT_LT(relative_difference(g3, 3.0 * g1), 1e-13);
}

TEST(Reconstruction, RecoversMatrixFromPairings) {
  int d = 3;
  auto basis = hermitian_basis(d);
  EXPECT_EQ(basis.size(), 9u);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      EXPECT_NEAR(std::abs((basis[a] * basis[b]).trace() - (a == b ? 1.0 : 0.0)), 0.0, 1e-14);
  std::mt19937_64 rng(4);
  Matrix X = random_matrix(d, rng);
  auto phi = [&](const Matrix& a) { return (X * a).trace() / double(d); };
  EXPECT_LT(max_abs(reconstruct_from_pairings(d, phi) - X), 1e-13);
}

TEST(Reconstruction, GradientFromFunctionalDerivative) {
  int d = 4;
  auto ctx = MatrixContext::random(d, 21);
  auto grad = gradient_assemble(cm_coefficients(T()), exp_ridge(), ctx);
  const double step = 1e-5;
  auto pairing = [&](const Matrix& a) {
    auto plus = ctx.with_h(ctx.h() + step * a), minus = ctx.with_h(ctx.h() - step * a);
    return (functional_value(plus, T(), exp_ridge()) - functional_value(minus, T(), exp_ridge())) / (2 * step);
  };
  // only hermitian directions are admissible, so compare the hermitian part
  Matrix X = reconstruct_from_pairings(d, pairing);
  Matrix herm = 0.5 * (grad + grad.adjoint());
  EXPECT_LT(relative_difference(0.5 * (X + X.adjoint()), herm), 1e-6);
}

// ------------------------------------------------------------ difference coordinates

TEST(Modular, FaceZeroInDifferenceCoordinates) {
  auto e = face(0, SpectralExpr::generic(1));
  auto m = to_modular(e);
  EXPECT_EQ(m.coordinates(), Coordinates::Difference);
  ModularExpr expected(Coordinates::Difference, 2);
  expected.add({0, 1}, {{1, 0}}, 1);
  expected.add({1, 1}, {{1, 0}}, -1);
  EXPECT_EQ(m, expected);
  // frozen: cosh at x = (0, 1/2, 2)
  std::vector<Complex> y{0.5, 1.5};
  EXPECT_NEAR(m.evaluate(BaseFunction::cosh(), y).real(), -2.8195721516807683, 1e-13);
}

TEST(Modular, LastFace) {
  auto m = to_modular(last_face(SpectralExpr::generic(1)));
  ModularExpr expected(Coordinates::Difference, 2);
  expected.add({0, -1}, {{1, 1}}, 1);
  expected.add({1, 0}, {{1, 1}}, -1);
  EXPECT_EQ(m, expected);
}

TEST(Modular, RoundTripAndEvaluation) {
  auto c = cm_coefficients(SpectralExpr::generic(1));
  auto pos = expand_differences(c.H);
  EXPECT_EQ(from_modular(to_modular(pos)), pos);
  std::vector<Complex> x{0.2, -0.9, 1.7};
  std::vector<Complex> y{x[1] - x[0], x[2] - x[1]};
  auto K = BaseFunction::ridge(BaseFunction::cosh(), {-1, 1});
  Complex bracket = eval_expr(c.H, K, x);
  EXPECT_LT(std::abs(pos.evaluate(BaseFunction::cosh(), x) - bracket), 1e-12 * std::max(1.0, std::abs(bracket)));
  EXPECT_LT(std::abs(to_modular(pos).evaluate(BaseFunction::cosh(), y) - bracket),
            1e-12 * std::max(1.0, std::abs(bracket)));
}

TEST(Modular, ConfluentSlotsRejected) {
  SpectralExpr e("f", 2, 2);
  e.add(BracketTerm("f", 2, {{0, 0}, {1, 2}}), 1);
  EXPECT_THROW(expand_differences(e), DomainError);
  EXPECT_THROW(expand_differences(SpectralExpr::generic(3)), ArityError);
}

TEST(Modular, EvenProfileSimplifies) {
  auto r = cm_modular_compare(BaseFunction::cosh(), 20, 5);
  EXPECT_TRUE(r.even);
  EXPECT_LT(r.residual_modular, 1e-12);
  EXPECT_LT(r.residual_even, 1e-12);
  for (const auto& [t, c] : r.closed.terms()) {
    auto lead = std::find_if(t.argument.begin(), t.argument.end(), [](const Rational& q) { return q != 0; });
    if (lead != t.argument.end()) EXPECT_GT(*lead, 0);
  }
  auto odd = cm_modular_compare(BaseFunction::exponential(), 5, 5);
  EXPECT_FALSE(odd.even);
  EXPECT_LT(odd.residual_modular, 1e-12);
}
