#pragma once

#include "rearrange/base_function.hpp"
#include "rearrange/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace rearrange {

/// e_k = x^k (Monomial) or omega_lambda^k (Resolvent, lambda formal).
enum class TensorBasis { Monomial, Resolvent };

/// Sum of c * e_{k_0} (x) ... (x) e_{k_r} with exact coefficients, keyed by exponent vectors.
class TensorExpr {
 public:
  using Exponents = std::vector<int>;

  TensorExpr(TensorBasis basis, int legs);
  static TensorExpr element(TensorBasis basis, Exponents exps, const Rational& coeff = 1);

  void add(const Exponents& exps, const Rational& coeff);
  void add(const TensorExpr& other, const Rational& coeff = 1);

  TensorBasis basis() const { return basis_; }
  int legs() const { return legs_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const Exponents& exps) const;

  bool operator==(const TensorExpr& other) const = default;
  friend TensorExpr operator+(const TensorExpr& a, const TensorExpr& b);
  friend TensorExpr operator-(const TensorExpr& a, const TensorExpr& b);
  friend TensorExpr operator*(const Rational& c, const TensorExpr& a);

 private:
  TensorBasis basis_;
  int legs_;
  std::map<Exponents, Rational> terms_;
};

/// Divided difference of e_p written as a two-leg tensor:
/// x^k -> sum_{a+b=k-1} x^a (x) x^b, omega^p -> -sum_{a+b=p+1, a,b>=1} omega^a (x) omega^b.
TensorExpr coproduct_power(TensorBasis basis, int power);

/// coproduct_power for Monomial and Resolvent bases. Other bases throw DomainError:
/// their coproduct needs a completed tensor product.
TensorExpr coproduct(const BaseFunction& base);

/// Coproduct applied to one leg (the face map delta_leg in the separable picture).
TensorExpr coproduct_at(const TensorExpr& t, int leg);
/// Multiply legs `leg` and `leg+1` (degeneracy sigma_leg).
TensorExpr contract_legs(const TensorExpr& t, int leg);
/// Multiply the last leg into the first (extra degeneracy).
TensorExpr contract_last_into_first(const TensorExpr& t);
/// (a_0,...,a_n) -> (a_n,a_0,...,a_{n-1}), applied `times` times (negative allowed).
TensorExpr rotate_legs(const TensorExpr& t, int times = 1);
/// Multiply one leg by e_power.
TensorExpr multiply_leg(const TensorExpr& t, int leg, int power);
/// Derivative of one leg.
TensorExpr differentiate_leg(const TensorExpr& t, int leg);
/// Concatenate legs.
TensorExpr tensor_product(const TensorExpr& a, const TensorExpr& b);

/// Evaluate at points (one per leg); lambda used for the Resolvent basis.
Complex evaluate(const TensorExpr& t, std::span<const Complex> pts, Complex lambda = {2, 1});

std::string to_string(const TensorExpr& t);

}  // namespace rearrange
