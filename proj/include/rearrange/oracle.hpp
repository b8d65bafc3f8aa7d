#pragma once

// Reference semantics of the generators acting directly on functions, written
// without bracket terms. Used to check the symbolic engine.

#include "rearrange/base_function.hpp"
#include "rearrange/ops.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace rearrange::oracle {

/// Callable function of x_0..x_arity.
struct Function {
  int arity;
  std::function<Complex(std::span<const Complex>)> fn;
  Complex operator()(std::span<const Complex> x) const { return fn(x); }
};

Function from_base(const BaseFunction& base);

/// Divided differences by difference quotients; coincident nodes and partial
/// derivatives by the Cauchy integral on a small circle.
Function apply(const Generator& g, const Function& f);
Function apply(const OperatorWord& w, const Function& f);
Complex evaluate(const OperatorSum& s, const Function& f, std::span<const Complex> pts);

/// Polynomial in x_0..x_arity with rational coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  explicit Polynomial(int arity) : arity_(arity) {}

  void add(const Exponents& e, const Rational& c);
  void add(const Polynomial& p, const Rational& c = 1);
  int arity() const { return arity_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational operator()(std::span<const Rational> x) const;
  bool operator==(const Polynomial&) const = default;

 private:
  int arity_;
  std::map<Exponents, Rational> terms_;
};

/// (w_0 x_0 + ... + w_k x_k)^degree.
Polynomial ridge_power(const std::vector<Rational>& weights, int degree);

Polynomial apply(const Generator& g, const Polynomial& p);
Polynomial apply(const OperatorWord& w, const Polynomial& p);
Polynomial apply(const OperatorSum& s, const Polynomial& p);

}  // namespace rearrange::oracle
