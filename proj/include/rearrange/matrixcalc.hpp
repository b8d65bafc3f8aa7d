#pragma once
// Functional calculus of a hermitian matrix h acting on multilinear products:
// S_h(f)(rho_1, ..., rho_n) computed in the eigenbasis of h.

#include "rearrange/base_function.hpp"
#include "rearrange/oracle.hpp"
#include "rearrange/spectral_expr.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace rearrange {

using Matrix = Eigen::MatrixXcd;

struct SpectralData {
  Eigen::VectorXd eigenvalues;  ///< ascending
  Matrix U;                     ///< h = U diag(eigenvalues) U^H
};

/// Hermitian h, hermitian derivation generator D (nabla = i[D, .]) and the normalized trace.
class MatrixContext {
 public:
  MatrixContext(Matrix h, Matrix D, std::uint64_t seed = 0);
  /// h and D drawn from the Gaussian unitary ensemble scaled by 1/sqrt(d).
  static MatrixContext random(int d, std::uint64_t seed);

  int dimension() const { return static_cast<int>(h_.rows()); }
  const Matrix& h() const { return h_; }
  const Matrix& D() const { return D_; }
  const SpectralData& spectral() const { return spec_; }
  std::uint64_t seed() const { return seed_; }

  /// Tr(a) / d.
  Complex trace(const Matrix& a) const;
  /// i [D, a].
  Matrix nabla(const Matrix& a) const;
  /// Same D and seed, new h.
  MatrixContext with_h(Matrix h) const;

 private:
  Matrix h_, D_;
  SpectralData spec_;
  std::uint64_t seed_;
};

SpectralData spectral_data(const Matrix& hermitian);
Matrix random_hermitian(int d, std::mt19937_64& rng);
/// Complex Gaussian entries scaled by 1/sqrt(d).
Matrix random_matrix(int d, std::mt19937_64& rng);
std::vector<Matrix> random_matrices(int d, int count, std::mt19937_64& rng);

/// f(x_0, ..., x_arity) as a plain callable.
struct SpectralKernel {
  int arity;
  std::function<Complex(std::span<const Complex>)> fn;
};

SpectralKernel kernel(const BaseFunction& base);
/// Evaluates the bracket expression with the given base function.
SpectralKernel kernel(const SpectralExpr& expr, const BaseFunction& base);
SpectralKernel kernel(const oracle::Function& f);

/// rho_1 ... rho_j h rho_{j+1} ... rho_n.
Matrix mult_operator(int j, const Matrix& h, std::span<const Matrix> rho);

/// S_h(f)(rho_1, ..., rho_n); rho.size() must equal f.arity. Throws DomainError when f is
/// not finite at some eigenvalue tuple.
Matrix schwartz_apply(const MatrixContext& ctx, const SpectralKernel& f, std::span<const Matrix> rho);
Matrix schwartz_apply(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                      std::span<const Matrix> rho);

/// f(h) for a one-variable function.
Matrix matrix_function(const Matrix& hermitian, const BaseFunction& f);

/// Max-entry norm.
double max_abs(const Matrix& a);
/// ||a - b||_F / max(||a||_F, ||b||_F, tiny).
double relative_difference(const Matrix& a, const Matrix& b);

/// || S_h(f)(.., 1 at position j+1, ..) - S_h(sigma_j f)(rho with the unit removed) ||_max.
/// f has arity n = rho.size(); the entry rho[j] is replaced by the identity.
double check_degeneracy_lemma(const MatrixContext& ctx, const SpectralExpr& f,
                              const BaseFunction& base, int j, std::span<const Matrix> rho);

struct TraceResiduals {
  double extra_degeneracy;  ///< phi(S(f)(rho_1..rho_n)) vs phi(S(sigma_n f)(rho_1..rho_{n-1}) rho_n)
  double cyclic;            ///< phi(S(f)(rho_1..rho_n) rho_{n+1}) vs phi(S(tau f)(rho_2..rho_{n+1}) rho_1)
};
/// f has arity n >= 1; rho has n + 1 factors.
TraceResiduals check_trace_cyclic(const MatrixContext& ctx, const SpectralExpr& f,
                                  const BaseFunction& base, std::span<const Matrix> rho);

enum class VariationMode {
  Conformal,  ///< derivative along h -> h + eps a
  Inner,      ///< nabla = i[D, .] applied to S_h(f)(rho)
};

/// The summands of the variation: for Conformal, S_h(delta_j f)(rho_1..rho_j, a, rho_{j+1}..rho_n)
/// for j = 0..n; for Inner, the same with a = nabla h followed by S_h(f)(.., nabla rho_j, ..).
std::vector<Matrix> variation_terms(const MatrixContext& ctx, const SpectralExpr& f,
                                    const BaseFunction& base, std::span<const Matrix> rho,
                                    const Matrix& a, VariationMode mode);
Matrix variation(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                 std::span<const Matrix> rho, const Matrix& a, VariationMode mode);
/// Central difference of eps -> S_{h + eps a}(f)(rho).
Matrix variation_fd(const MatrixContext& ctx, const SpectralExpr& f, const BaseFunction& base,
                    std::span<const Matrix> rho, const Matrix& a, double step);

struct TaylorReport {
  int order;
  std::vector<double> ts;
  std::vector<double> remainders;
  double slope;
};

/// r_N(t) = || f(h + t b) - f(h) - sum_{k=1..N} S_h(f[x_0..x_k])((t b)^k) ||_F on the grid ts.
TaylorReport taylor_check(const MatrixContext& ctx, const BaseFunction& f, const Matrix& b,
                          int order, std::span<const double> ts);
/// count points from hi down to lo, evenly spaced in log.
std::vector<double> log_grid(double hi, double lo, int count);
/// Least-squares slope of log(ys) against log(xs).
double fitted_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace rearrange
