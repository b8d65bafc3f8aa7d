#include "rearrange/matrixcalc.hpp"

#include "rearrange/errors.hpp"
#include "rearrange/numeval.hpp"
#include "rearrange/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace rearrange {

SpectralData spectral_data(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

MatrixContext::MatrixContext(Matrix h, Matrix D, std::uint64_t seed)
    : h_(std::move(h)), D_(std::move(D)), seed_(seed) {
  if (h_.rows() != h_.cols() || D_.rows() != h_.rows() || D_.cols() != h_.cols())
    throw std::invalid_argument("MatrixContext: h and D must be square of equal size");
  if ((h_ - h_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("h is not hermitian");
  if ((D_ - D_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("D is not hermitian");
  spec_ = spectral_data(h_);
}

MatrixContext MatrixContext::random(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix h = random_hermitian(d, rng);
  Matrix D = random_hermitian(d, rng);
  return MatrixContext(std::move(h), std::move(D), seed);
}

Complex MatrixContext::trace(const Matrix& a) const { return a.trace() / static_cast<double>(dimension()); }

Matrix MatrixContext::nabla(const Matrix& a) const { return Complex(0, 1) * (D_ * a - a * D_); }

MatrixContext MatrixContext::with_h(Matrix h) const { return MatrixContext(std::move(h), D_, seed_); }

Matrix random_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(d, d);
  const double s = 1.0 / std::sqrt(2.0 * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      double re = g(rng);
      double im = g(rng);
      a(r, c) = Complex(re, im) * s;
    }
  return a;
}

Matrix random_hermitian(int d, std::mt19937_64& rng) {
  Matrix a = random_matrix(d, rng);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

std::vector<Matrix> random_matrices(int d, int count, std::mt19937_64& rng) {
  std::vector<Matrix> out;
  for (int k = 0; k < count; ++k) out.push_back(random_matrix(d, rng));
  return out;
}

SpectralKernel kernel(const BaseFunction& base) {
  return {base.arity() - 1, [base](std::span<const Complex> x) { return base(x); }};
}

SpectralKernel kernel(const SpectralExpr& expr, const BaseFunction& base) {
  return {expr.arity(), [expr, base](std::span<const Complex> x) { return eval_expr(expr, base, x); }};
}

SpectralKernel kernel(const oracle::Function& f) { return {f.arity, f.fn}; }

Matrix mult_operator(int j, const Matrix& h, std::span<const Matrix> rho) {
  const int n = static_cast<int>(rho.size());
  if (j < 0 || j > n) throw ArityError("mult_operator: slot " + std::to_string(j) + " outside 0.." + std::to_string(n));
  Matrix out = Matrix::Identity(h.rows(), h.cols());
  for (int k = 0; k < n; ++k) {
    if (k == j) out = out * h;
    out = out * rho[static_cast<std::size_t>(k)];
  }
  if (j == n) out = out * h;
  return out;
}

namespace {

// Accumulates f(lambda_{i_0..i_n}) * prod rt_k(i_{k-1}, i_k) into out(i_0, i_n).
struct EigenSum {
  const std::vector<Complex>& lambda;
  const std::vector<Matrix>& rt;
  const SpectralKernel& f;
  Matrix& out;
  std::vector<Complex> args;
  std::vector<int> idx;

  void run(int depth, Complex weight) {
    const int d = static_cast<int>(lambda.size());
    const int n = static_cast<int>(rt.size());
    if (depth == n + 1) {
      Complex v = f.fn(args);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("spectral function not finite at an eigenvalue tuple");
      out(idx.front(), idx.back()) += v * weight;
      return;
    }
    for (int i = 0; i < d; ++i) {
      Complex w = weight;
      if (depth > 0) {
        w *= rt[static_cast<std::size_t>(depth - 1)](idx[static_cast<std::size_t>(depth - 1)], i);
        if (w == Complex(0)) continue;
      }
      idx[static_cast<std::size_t>(depth)] = i;
      args[static_cast<std::size_t>(depth)] = lambda[static_cast<std::size_t>(i)];
      run(depth + 1, w);
    }
  }
};

}  // namespace

Matrix schwartz_apply(const MatrixContext& ctx, const SpectralKernel& f, std::span<const Matrix> rho) {
  const int n = static_cast<int>(rho.size());
  if (f.arity != n)
    throw ArityError("schwartz_apply: function of " + std::to_string(f.arity + 1) + " variables needs " +
                     std::to_string(f.arity) + " matrices, got " + std::to_string(n));
  const auto& sp = ctx.spectral();
  const int d = ctx.dimension();
  std::vector<Complex> lambda(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) lambda[static_cast<std::size_t>(i)] = sp.eigenvalues(i);
  std::vector<Matrix> rt;
  for (const auto& r : rho) rt.push_back(sp.U.adjoint() * r * sp.U);
  Matrix out = Matrix::Zero(d, d);
  EigenSum sum{lambda, rt, f, out, std::vector<Complex>(static_cast<std::size_t>(n) + 1),
               std::vector<int>(static_cast<std::size_t>(n) + 1)};
  sum.run(0, Complex(1));
  return sp.U * out * sp.U.adjoint();
}

Matrix schwartz_apply(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                      std::span<const Matrix> rho) {
  return schwartz_apply(ctx, kernel(f, base), rho);
}

Matrix matrix_function(const Matrix& hermitian, const BaseFunction& f) {
  auto sp = spectral_data(hermitian);
  Eigen::VectorXcd v(sp.eigenvalues.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = f(Complex(sp.eigenvalues(i)));
  return sp.U * v.asDiagonal() * sp.U.adjoint();
}

double max_abs(const Matrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

double relative_difference(const Matrix& a, const Matrix& b) {
  double scale = std::max({a.norm(), b.norm(), 1e-300});
  return (a - b).norm() / scale;
}

double check_degeneracy_lemma(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                              int j, std::span<const Matrix> rho) {
  const int n = static_cast<int>(rho.size());
  if (j < 0 || j >= n) throw ArityError("degeneracy lemma: j must lie in 0.." + std::to_string(n - 1));
  std::vector<Matrix> with_unit(rho.begin(), rho.end());
  with_unit[static_cast<std::size_t>(j)] = Matrix::Identity(ctx.dimension(), ctx.dimension());
  std::vector<Matrix> removed;
  for (int k = 0; k < n; ++k)
    if (k != j) removed.push_back(rho[static_cast<std::size_t>(k)]);
  Matrix lhs = schwartz_apply(ctx, f, base, with_unit);
  Matrix rhs = schwartz_apply(ctx, degeneracy(j, f), base, removed);
  return max_abs(lhs - rhs);
}

TraceResiduals check_trace_cyclic(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                                  std::span<const Matrix> rho) {
  const int n = f.arity();
  if (n < 1 || static_cast<int>(rho.size()) != n + 1)
    throw ArityError("trace identities need arity >= 1 and arity + 1 matrices");
  std::span<const Matrix> first_n = rho.first(static_cast<std::size_t>(n));
  Matrix s = schwartz_apply(ctx, f, base, first_n);

  Complex a = ctx.trace(s);
  Complex b = ctx.trace(schwartz_apply(ctx, degeneracy(n, f), base, rho.first(static_cast<std::size_t>(n - 1))) *
                        rho[static_cast<std::size_t>(n - 1)]);

  Complex c = ctx.trace(s * rho[static_cast<std::size_t>(n)]);
  Complex e = ctx.trace(schwartz_apply(ctx, cyclic(f), base, rho.subspan(1)) * rho[0]);
  return {std::abs(a - b), std::abs(c - e)};
}

std::vector<Matrix> variation_terms(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                                    std::span<const Matrix> rho, const Matrix& a, VariationMode mode) {
  const int n = static_cast<int>(rho.size());
  const Matrix dir = mode == VariationMode::Inner ? ctx.nabla(ctx.h()) : a;
  std::vector<Matrix> out;
  for (int j = 0; j <= n; ++j) {
    std::vector<Matrix> args(rho.begin(), rho.begin() + j);
    args.push_back(dir);
    args.insert(args.end(), rho.begin() + j, rho.end());
    out.push_back(schwartz_apply(ctx, face(j, f), base, args));
  }
  if (mode == VariationMode::Inner) {
    for (int k = 0; k < n; ++k) {
      std::vector<Matrix> args(rho.begin(), rho.end());
      args[static_cast<std::size_t>(k)] = ctx.nabla(args[static_cast<std::size_t>(k)]);
      out.push_back(schwartz_apply(ctx, f, base, args));
    }
  }
  return out;
}

Matrix variation(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                 std::span<const Matrix> rho, const Matrix& a, VariationMode mode) {
  Matrix sum = Matrix::Zero(ctx.dimension(), ctx.dimension());
  for (const auto& t : variation_terms(ctx, f, base, rho, a, mode)) sum += t;
  return sum;
}

Matrix variation_fd(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                    std::span<const Matrix> rho, const Matrix& a, double step) {
  auto plus = ctx.with_h(ctx.h() + step * a);
  auto minus = ctx.with_h(ctx.h() - step * a);
  return (schwartz_apply(plus, f, base, rho) - schwartz_apply(minus, f, base, rho)) / (2.0 * step);
}

std::vector<double> log_grid(double hi, double lo, int count) {
  std::vector<double> out;
  if (count == 1) return {hi};
  const double a = std::log(hi), b = std::log(lo);
  for (int k = 0; k < count; ++k) out.push_back(std::exp(a + (b - a) * k / (count - 1)));
  return out;
}

double fitted_slope(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double x = std::log(xs[k]), y = std::log(ys[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

TaylorReport taylor_check(const MatrixContext& ctx, const BaseFunction& f, const Matrix& b, int order,
                          std::span<const double> ts) {
  if (!f.is_univariate()) throw ArityError("taylor_check needs a one-variable function");
  TaylorReport rep{order, {ts.begin(), ts.end()}, {}, 0.0};
  const Matrix fh = matrix_function(ctx.h(), f);
  // S_h(f[x_0..x_k])(b, ..., b), scaled by t^k below
  std::vector<Matrix> terms;
  for (int k = 1; k <= order; ++k) {
    SpectralKernel dd{k, [f](std::span<const Complex> x) { return divided_difference(f, x); }};
    std::vector<Matrix> bs(static_cast<std::size_t>(k), b);
    terms.push_back(schwartz_apply(ctx, dd, bs));
  }
  for (double t : ts) {
    Matrix r = matrix_function(ctx.h() + t * b, f) - fh;
    double tk = 1.0;
    for (const auto& term : terms) {
      tk *= t;
      r -= tk * term;
    }
    rep.remainders.push_back(r.norm());
  }
  rep.slope = fitted_slope(rep.ts, rep.remainders);
  return rep;
}

}  // namespace rearrange
