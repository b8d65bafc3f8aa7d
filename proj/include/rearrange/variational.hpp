#pragma once
// Gradient of F(h) = phi(S_h(T)(nabla h) . nabla h) in terms of operators acting on T.

#include "rearrange/matrixcalc.hpp"
#include "rearrange/spectral_expr.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace rearrange {

/// grad F = S_h(K)(nabla^2 h) + S_h(H)(nabla h, nabla h).
struct GradientCoefficients {
  SpectralExpr K;  ///< arity 1
  SpectralExpr H;  ///< arity 2
  bool operator==(const GradientCoefficients&) const = default;
};

/// K = -(1 + tau) T, H = (delta_0 + delta_1 - delta_2) K with delta_2 the last face.
/// Throws ArityError unless T has arity 1.
GradientCoefficients cm_coefficients(const SpectralExpr& T);

/// Contribution of varying the two nabla h factors: K = -(1+tau)T, H = -(delta_0+delta_1)(1+tau)T.
GradientCoefficients cm_part_factors(const SpectralExpr& T);
/// Contribution of varying S_h(T) itself: K = 0, H = tau delta_0 T + tau^2 delta_1 T.
GradientCoefficients cm_part_function(const SpectralExpr& T);

// ------------------------------------------------------------ trace expressions

/// nabla^order applied to h or to the variation direction a.
struct Factor {
  bool direction = false;
  int order = 0;
  auto operator<=>(const Factor&) const = default;
};

/// sum over factor lists [rho_1..rho_n, rho_{n+1}] of phi(S_h(f)(rho_1..rho_n) rho_{n+1}),
/// where f is the expression stored for the list (arity n).
class TraceExpr {
 public:
  using Key = std::vector<Factor>;
  void add(const Key& factors, const SpectralExpr& f);
  const std::map<Key, SpectralExpr>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  std::map<Key, SpectralExpr> terms_;
};

/// First variation along h -> h + eps a: every h factor in turn replaced by a, plus
/// sum_j delta_j f with a inserted at slot j.
TraceExpr vary(const TraceExpr& e);
/// Rotates every term (trace property) until the last factor involves a.
TraceExpr rotate_direction_last(const TraceExpr& e);
/// Integration by parts phi(Y nabla Z) = -phi(nabla(Y) Z) until the last factor is a itself.
TraceExpr integrate_by_parts(const TraceExpr& e);

struct PipelineResult {
  TraceExpr functional;  ///< F
  TraceExpr varied;      ///< dF(a)
  TraceExpr normalized;  ///< every term ends in a
  GradientCoefficients coefficients;
};

/// Runs vary -> rotate -> integrate by parts -> collect on F(h) = phi(S_h(T)(nabla h) nabla h).
PipelineResult derive_gradient(const SpectralExpr& T);

// ------------------------------------------------------------ numerics

/// F(h) for the context's h and nabla; base is the two-variable function standing for T.
Complex functional_value(const MatrixContext& ctx, const SpectralExpr& T, const BaseFunction& base);

Matrix gradient_assemble(const GradientCoefficients& c, const BaseFunction& base, const MatrixContext& ctx);

struct GradientCheck {
  double max_relative_error = 0.0;
  std::vector<double> relative_errors;  ///< one per direction
  std::vector<Complex> finite_differences;
  std::vector<Complex> pairings;        ///< phi(grad . a)
};

/// Central difference of eps -> F(h + eps a) against phi(grad . a) for each direction.
GradientCheck gradient_check(const SpectralExpr& T, const BaseFunction& base, const MatrixContext& ctx,
                             std::span<const Matrix> directions, double step);

/// Orthonormal basis of hermitian d x d matrices for the pairing Tr(ab).
std::vector<Matrix> hermitian_basis(int d);
/// The unique X with phi(X a) = pairing(a) for all matrices a.
Matrix reconstruct_from_pairings(int d, const std::function<Complex(const Matrix&)>& pairing);

}  // namespace rearrange
