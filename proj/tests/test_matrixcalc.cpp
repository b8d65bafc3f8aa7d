#include "rearrange/errors.hpp"
#include "rearrange/matrixcalc.hpp"
#include "rearrange/ops.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

using namespace rearrange;

namespace {

Matrix I(int d) { return Matrix::Identity(d, d); }

BaseFunction sep_exp(int arity) {
  std::vector<BaseFunction> fs;
  for (int i = 0; i <= arity; ++i) fs.push_back(BaseFunction::exponential(Rational(i + 1, 3)));
  return BaseFunction::separable(fs);
}

}  // namespace

TEST(MultOperator, InsertsH) {
  std::mt19937_64 rng(1);
  auto r = random_matrices(3, 2, rng);
  Matrix h = random_hermitian(3, rng);
  EXPECT_LT(max_abs(mult_operator(0, h, r) - h * r[0] * r[1]), 1e-14);
  EXPECT_LT(max_abs(mult_operator(1, h, r) - r[0] * h * r[1]), 1e-14);
  EXPECT_LT(max_abs(mult_operator(2, h, r) - r[0] * r[1] * h), 1e-14);
}

TEST(Schwartz, ArityZeroIsMatrixFunction) {
  auto ctx = MatrixContext::random(5, 2);
  auto e = BaseFunction::exponential();
  Matrix a = schwartz_apply(ctx, kernel(e), {});
  EXPECT_LT(relative_difference(a, matrix_function(ctx.h(), e)), 1e-13);
  // cross-check against the eigendecomposition directly
  Eigen::SelfAdjointEigenSolver<Matrix> es(ctx.h());
  Matrix b = es.eigenvectors() * es.eigenvalues().array().exp().matrix().cast<Complex>().asDiagonal() *
             es.eigenvectors().adjoint();
  EXPECT_LT(relative_difference(a, b), 1e-13);
}

TEST(Schwartz, ResolventKernelIsSandwich) {
  // f(x0, x1) = 1/((x0 - z)(x1 - z)) gives (h - z)^{-1} rho (h - z)^{-1}
  auto ctx = MatrixContext::random(4, 3);
  std::mt19937_64 rng(9);
  Matrix rho = random_matrix(4, rng);
  const Complex z(0.3, 1.0);
  SpectralKernel k{1, [z](std::span<const Complex> x) { return 1.0 / ((x[0] - z) * (x[1] - z)); }};
  Matrix R = (ctx.h() - z * I(4)).inverse();
  std::vector<Matrix> args{rho};
  EXPECT_LT(relative_difference(schwartz_apply(ctx, k, args), R * rho * R), 1e-13);
}

TEST(Schwartz, SeparableKernelFactorizes) {
  auto ctx = MatrixContext::random(5, 4);
  std::mt19937_64 rng(10);
  auto rho = random_matrices(5, 2, rng);
  auto base = BaseFunction::separable({BaseFunction::exponential(), BaseFunction::monomial(2),
                                       BaseFunction::exponential(Rational(-1, 2))});
  Matrix lhs = schwartz_apply(ctx, SpectralExpr::generic(2), base, rho);
  Matrix f0 = matrix_function(ctx.h(), BaseFunction::exponential());
  Matrix f1 = matrix_function(ctx.h(), BaseFunction::monomial(2));
  Matrix f2 = matrix_function(ctx.h(), BaseFunction::exponential(Rational(-1, 2)));
  EXPECT_LT(relative_difference(lhs, f0 * rho[0] * f1 * rho[1] * f2), 1e-13);
}

TEST(Schwartz, MultilinearAndCovariant) {
  auto ctx = MatrixContext::random(4, 5);
  std::mt19937_64 rng(12);
  auto rho = random_matrices(4, 2, rng);
  Matrix extra = random_matrix(4, rng);
  auto base = BaseFunction::ridge(BaseFunction::exponential(), {Rational(1, 2), Rational(1, 3), Rational(1, 5)});
  auto f = SpectralExpr::generic(2);
  const Complex c(0.7, -0.2);
  std::vector<Matrix> mixed{rho[0] + c * extra, rho[1]}, other{extra, rho[1]};
  Matrix lin = schwartz_apply(ctx, f, base, mixed) - schwartz_apply(ctx, f, base, rho) -
               c * schwartz_apply(ctx, f, base, other);
  EXPECT_LT(max_abs(lin), 1e-12);

  // unitary conjugation of every input
  Matrix Q = Eigen::HouseholderQR<Matrix>(random_matrix(4, rng)).householderQ();
  MatrixContext rot(Q * ctx.h() * Q.adjoint(), ctx.D());
  std::vector<Matrix> rrho{Q * rho[0] * Q.adjoint(), Q * rho[1] * Q.adjoint()};
  EXPECT_LT(relative_difference(schwartz_apply(rot, f, base, rrho), Q * schwartz_apply(ctx, f, base, rho) * Q.adjoint()),
            1e-12);
}

TEST(Schwartz, PolynomialKernelIsPlainProduct) {
  // x^2 on two points: [x0, x1] -> x0 + x1, i.e. S(f)(a) = h a + a h
  auto ctx = MatrixContext::random(5, 6);
  std::mt19937_64 rng(3);
  Matrix a = random_matrix(5, rng);
  auto d0 = face(0, SpectralExpr::generic(0));
  std::vector<Matrix> args{a};
  Matrix s = schwartz_apply(ctx, d0, BaseFunction::monomial(2), args);
  EXPECT_LT(relative_difference(s, ctx.h() * a + a * ctx.h()), 1e-13);
}

TEST(Schwartz, NonFiniteKernelRejected) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.0;
  MatrixContext ctx(h, Matrix::Zero(2, 2));
  SpectralKernel k{0, [](std::span<const Complex> x) { return 1.0 / x[0]; }};
  EXPECT_THROW(schwartz_apply(ctx, k, {}), DomainError);
}

TEST(Context, TraceAndNabla) {
  auto ctx = MatrixContext::random(6, 7);
  std::mt19937_64 rng(2);
  Matrix a = random_matrix(6, rng), b = random_matrix(6, rng);
  EXPECT_NEAR(std::abs(ctx.trace(ctx.nabla(a))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(ctx.trace(a * b) - ctx.trace(b * a)), 0.0, 1e-14);
  // derivation
  EXPECT_LT(max_abs(ctx.nabla(a * b) - ctx.nabla(a) * b - a * ctx.nabla(b)), 1e-13);
  EXPECT_NEAR(std::abs(ctx.trace(I(6)) - 1.0), 0.0, 1e-15);
}

TEST(Lemmas, DegeneracyRemovesUnit) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto ctx = MatrixContext::random(5, seed);
    std::mt19937_64 rng(seed + 100);
    for (int n = 1; n <= 3; ++n) {
      auto rho = random_matrices(5, n, rng);
      for (int j = 0; j < n; ++j)
        EXPECT_LT(check_degeneracy_lemma(ctx, SpectralExpr::generic(n), sep_exp(n), j, rho), 1e-12)
            << "n=" << n << " j=" << j;
    }
  }
}

TEST(Lemmas, TraceCyclicity) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto ctx = MatrixContext::random(5, seed);
    std::mt19937_64 rng(seed + 200);
    for (int n = 1; n <= 3; ++n) {
      auto rho = random_matrices(5, n + 1, rng);
      auto r = check_trace_cyclic(ctx, SpectralExpr::generic(n), sep_exp(n), rho);
      EXPECT_LT(r.extra_degeneracy, 1e-12);
      EXPECT_LT(r.cyclic, 1e-12);
    }
  }
}

TEST(Variation, ConformalMatchesFiniteDifference) {
  auto ctx = MatrixContext::random(5, 8);
  std::mt19937_64 rng(8);
  auto rho = random_matrices(5, 2, rng);
  Matrix a = random_hermitian(5, rng);
  auto base = BaseFunction::ridge(BaseFunction::exponential(), {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
  auto f = SpectralExpr::generic(2);
  Matrix exact = variation(ctx, f, base, rho, a, VariationMode::Conformal);
  EXPECT_LT(relative_difference(exact, variation_fd(ctx, f, base, rho, a, 1e-5)), 1e-8);
  EXPECT_EQ(variation_terms(ctx, f, base, rho, a, VariationMode::Conformal).size(), 3u);
  // central difference error is O(step^2)
  double e1 = relative_difference(exact, variation_fd(ctx, f, base, rho, a, 1e-3));
  double e2 = relative_difference(exact, variation_fd(ctx, f, base, rho, a, 5e-4));
  EXPECT_NEAR(e1 / e2, 4.0, 0.3);
}

TEST(Variation, InnerIsTheDerivation) {
  auto ctx = MatrixContext::random(5, 9);
  std::mt19937_64 rng(19);
  auto rho = random_matrices(5, 2, rng);
  auto base = sep_exp(2);
  auto f = SpectralExpr::generic(2);
  Matrix direct = ctx.nabla(schwartz_apply(ctx, f, base, rho));
  Matrix via = variation(ctx, f, base, rho, ctx.nabla(ctx.h()), VariationMode::Inner);
  EXPECT_LT(relative_difference(direct, via), 1e-12);
  EXPECT_EQ(variation_terms(ctx, f, base, rho, ctx.nabla(ctx.h()), VariationMode::Inner).size(), 5u);
}

TEST(Taylor, RemainderSlopes) {
  auto ctx = MatrixContext::random(5, 10);
  std::mt19937_64 rng(10);
  Matrix b = random_hermitian(5, rng);
  auto ts = log_grid(1e-1, 1e-3, 8);
  for (int N = 1; N <= 2; ++N) {
    auto r = taylor_check(ctx, BaseFunction::exponential(), b, N, ts);
    EXPECT_NEAR(r.slope, N + 1, 0.1) << N;
  }
  // for x^2 the first-order remainder is exactly t^2 b^2
  auto q = taylor_check(ctx, BaseFunction::monomial(2), b, 1, ts);
  for (std::size_t k = 0; k < ts.size(); ++k)
    EXPECT_NEAR(q.remainders[k] / (ts[k] * ts[k]), (b * b).norm(), 1e-8 * (b * b).norm());
}

TEST(Taylor, Helpers) {
  auto g = log_grid(1.0, 1e-2, 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_NEAR(g[1], 0.1, 1e-15);
  std::vector<double> xs{1, 2, 4}, ys{3, 12, 48};
  EXPECT_NEAR(fitted_slope(xs, ys), 2.0, 1e-12);
}
