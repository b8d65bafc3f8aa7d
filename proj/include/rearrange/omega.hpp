#pragma once
// Tensor powers of the resolvent omega(x) = (x - lambda)^-1 indexed by multi-indices,
// and the action of faces, degeneracies, cyclic maps and partials on the indices.

#include "rearrange/ops.hpp"
#include "rearrange/tensor.hpp"

#include <cstdint>
#include <vector>

namespace rearrange::omega {

using Index = std::vector<int>;

/// coeff * omega^{a_0} (x) ... (x) omega^{a_n}; every a_j >= 1.
TensorExpr term(const Index& alpha, const Rational& coeff = 1);
/// omega_{(1,...,1)} with n + 1 legs.
TensorExpr ones(int n);

TensorExpr face(int j, const TensorExpr& e);
TensorExpr degeneracy(int j, const TensorExpr& e);  ///< j = n merges the last leg into the first
/// tau moves the function of x_0 to x_n: (a_0..a_n) -> (a_1..a_n, a_0).
TensorExpr cyclic(const TensorExpr& e);
TensorExpr partial(int i, const TensorExpr& e);     ///< d omega^a = -a omega^{a+1}
TensorExpr apply(const Generator& g, const TensorExpr& e);
TensorExpr apply_word(const OperatorWord& w, const TensorExpr& e);

/// omega_alpha against prod_j (-1)^(a_j-1)/(a_j-1)! d_j^(a_j-1) omega_(1..1).
struct DifferentialRelation {
  TensorExpr lhs;
  TensorExpr rhs;
  bool holds;
};
DifferentialRelation differential_relation_check(const Index& alpha);

/// Index arithmetic against the bracket engine on a separable product of resolvent powers,
/// evaluated at `samples` random real points. Returns the largest relative residual.
double omega_vs_generic(const Index& alpha, const OperatorWord& w, int samples, std::uint64_t seed);

/// d^2/dx^2 = sigma_0 delta_0 sigma_0 delta_0 rewritten as sigma_0 sigma_0 delta_0 delta_0 +
/// sigma_0 sigma_0 delta_1 delta_0, applied to omega.
struct SecondDerivativeDemo {
  OperatorWord word;
  OperatorSum rewritten;
  bool symbolic_identity;  ///< both sides agree on the generic one-variable symbol
  TensorExpr direct;
  TensorExpr first;
  TensorExpr second;
  bool equals_two_omega_cubed;
};
SecondDerivativeDemo second_derivative_decomposition_demo();

/// Multi-indices of n + 1 positive entries with total at most `total`.
std::vector<Index> indices_up_to(int total);

}  // namespace rearrange::omega
