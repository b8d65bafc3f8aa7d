#pragma once

#include "rearrange/rational.hpp"

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rearrange {

using Complex = std::complex<double>;

struct Exponential {
  Rational rate{1};  ///< exp(rate * x)
};

struct Monomial {
  int degree = 0;
};

/// omega_lambda^power = (x - lambda)^(-power).
struct Resolvent {
  Rational lambda_re{2};
  Rational lambda_im{1};
  int power = 1;
  Complex lambda() const;
};

class BaseFunction;

/// f_0(y_0) * f_1(y_1) * ... with one-variable factors.
struct SeparableProduct {
  std::vector<BaseFunction> factors;
};

/// Opaque multivariate function given through its mixed partial derivatives.
struct BlackBox {
  using Partial = std::function<Complex(std::span<const Complex>, std::span<const int>)>;
  using ExactPartial = std::function<Rational(std::span<const Rational>, std::span<const int>)>;
  int arity = 1;
  std::string name = "blackbox";
  Partial partial;             ///< d^orders f at a point; orders.size() == arity
  ExactPartial partial_exact;  ///< optional rational path
  int max_order = -1;          ///< highest total derivative order supplied, -1 = unbounded
};

/// Concrete spectral function used for evaluation.
class BaseFunction {
 public:
  using Variant = std::variant<Exponential, Monomial, Resolvent, SeparableProduct, BlackBox>;

  BaseFunction(Exponential e) : v_(std::move(e)) {}
  BaseFunction(Monomial m);
  BaseFunction(Resolvent r);
  BaseFunction(SeparableProduct p);
  BaseFunction(BlackBox b);

  static BaseFunction exponential(const Rational& rate = 1);
  static BaseFunction monomial(int degree);
  static BaseFunction resolvent(const Rational& re = 2, const Rational& im = 1, int power = 1);
  static BaseFunction separable(std::vector<BaseFunction> factors);
  /// profile(w_0 y_0 + ... + w_k y_k); profile must be one-variable. Not separable unless
  /// the profile is exponential; exact when the profile is.
  static BaseFunction ridge(const BaseFunction& profile, std::vector<Rational> weights);
  /// cosh(x), an even one-variable function.
  static BaseFunction cosh();

  const Variant& variant() const { return v_; }
  /// Number of arguments.
  int arity() const;
  bool is_univariate() const { return arity() == 1; }
  /// True when the rational evaluation path is available.
  bool has_exact() const;
  std::string describe() const;

  /// f^(k)(x) / k! for a one-variable function.
  Complex taylor(int k, Complex x) const;
  Rational taylor(int k, const Rational& x) const;

  /// d^r f / (r_0! ... r_k!) at a point; orders.size() == arity().
  Complex mixed_taylor(std::span<const Complex> at, std::span<const int> orders) const;
  Rational mixed_taylor(std::span<const Rational> at, std::span<const int> orders) const;

  Complex operator()(std::span<const Complex> at) const;
  Complex operator()(Complex x) const;

 private:
  Variant v_;
};

Rational binomial(int n, int k);
double factorial(int n);

}  // namespace rearrange
