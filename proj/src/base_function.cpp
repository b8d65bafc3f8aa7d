#include "rearrange/base_function.hpp"

#include "rearrange/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rearrange {

Complex Resolvent::lambda() const {
  return {lambda_re.convert_to<double>(), lambda_im.convert_to<double>()};
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BaseFunction::BaseFunction(Monomial m) : v_(m) {
  if (m.degree < 0) throw ArityError("monomial degree must be >= 0");
}

BaseFunction::BaseFunction(Resolvent r) : v_(r) {
  if (r.power < 1) throw ArityError("resolvent power must be >= 1");
}

BaseFunction::BaseFunction(SeparableProduct p) : v_(std::move(p)) {
  const auto& f = std::get<SeparableProduct>(v_).factors;
  if (f.empty()) throw ArityError("separable product needs at least one factor");
  for (const auto& g : f)
    if (!g.is_univariate()) throw ArityError("separable factors must be one-variable");
}

BaseFunction::BaseFunction(BlackBox b) : v_(std::move(b)) {
  const auto& bb = std::get<BlackBox>(v_);
  if (bb.arity < 1 || !bb.partial) throw ArityError("black box needs arity >= 1 and an evaluator");
}

BaseFunction BaseFunction::exponential(const Rational& rate) { return Exponential{rate}; }
BaseFunction BaseFunction::monomial(int degree) { return Monomial{degree}; }
BaseFunction BaseFunction::resolvent(const Rational& re, const Rational& im, int power) {
  return Resolvent{re, im, power};
}
BaseFunction BaseFunction::separable(std::vector<BaseFunction> factors) {
  return SeparableProduct{std::move(factors)};
}

BaseFunction BaseFunction::cosh() {
  BlackBox bb;
  bb.arity = 1;
  bb.name = "cosh";
  bb.partial = [](std::span<const Complex> at, std::span<const int> orders) {
    return orders[0] % 2 == 0 ? std::cosh(at[0]) : std::sinh(at[0]);
  };
  return bb;
}

BaseFunction BaseFunction::ridge(const BaseFunction& profile, std::vector<Rational> weights) {
  if (!profile.is_univariate()) throw ArityError("ridge profile must be one-variable");
  if (weights.empty()) throw ArityError("ridge needs at least one weight");
  BlackBox bb;
  bb.arity = static_cast<int>(weights.size());
  bb.name = "ridge(" + profile.describe() + ")";
  std::vector<double> wd;
  for (const auto& w : weights) wd.push_back(w.convert_to<double>());
  bb.partial = [profile, wd](std::span<const Complex> at, std::span<const int> orders) {
    Complex s = 0;
    Complex scale = 1;
    int total = 0;
    for (std::size_t k = 0; k < wd.size(); ++k) {
      s += wd[k] * at[k];
      scale *= std::pow(wd[k], orders[k]);
      total += orders[k];
    }
    return scale * factorial(total) * profile.taylor(total, s);
  };
  if (profile.has_exact()) {
    bb.partial_exact = [profile, weights](std::span<const Rational> at, std::span<const int> orders) {
      Rational s = 0;
      Rational scale = 1;
      int total = 0;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        s += weights[k] * at[k];
        for (int r = 0; r < orders[k]; ++r) scale *= weights[k];
        total += orders[k];
      }
      Rational fact = 1;
      for (int i = 2; i <= total; ++i) fact *= i;
      return scale * fact * profile.taylor(total, s);
    };
  }
  return bb;
}

int BaseFunction::arity() const {
  if (auto p = std::get_if<SeparableProduct>(&v_)) return static_cast<int>(p->factors.size());
  if (auto b = std::get_if<BlackBox>(&v_)) return b->arity;
  return 1;
}

bool BaseFunction::has_exact() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Monomial>) return true;
        else if constexpr (std::is_same_v<T, Resolvent>) return x.lambda_im == 0;
        else if constexpr (std::is_same_v<T, Exponential>) return x.rate == 0;
        else if constexpr (std::is_same_v<T, SeparableProduct>)
          return std::all_of(x.factors.begin(), x.factors.end(),
                             [](const BaseFunction& f) { return f.has_exact(); });
        else return static_cast<bool>(x.partial_exact);
      },
      v_);
}

std::string BaseFunction::describe() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Exponential>) return "exp(" + format_rational(x.rate) + "x)";
        else if constexpr (std::is_same_v<T, Monomial>) return "x^" + std::to_string(x.degree);
        else if constexpr (std::is_same_v<T, Resolvent>)
          return "omega(" + format_rational(x.lambda_re) + "+" + format_rational(x.lambda_im) +
                 "i)^" + std::to_string(x.power);
        else if constexpr (std::is_same_v<T, SeparableProduct>) {
          std::string s;
          for (std::size_t k = 0; k < x.factors.size(); ++k)
            s += (k ? "*" : "") + x.factors[k].describe();
          return s;
        } else return x.name;
      },
      v_);
}

namespace {

void require_univariate(const BaseFunction& f) {
  if (!f.is_univariate())
    throw ArityError("one-variable function expected, got arity " + std::to_string(f.arity()));
}

}  // namespace

Complex BaseFunction::taylor(int k, Complex x) const {
  require_univariate(*this);
  if (k < 0) throw ArityError("negative derivative order");
  return std::visit(
      [&](const auto& f) -> Complex {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          double r = f.rate.template convert_to<double>();
          return std::pow(r, k) / factorial(k) * std::exp(r * x);
        } else if constexpr (std::is_same_v<T, Monomial>) {
          if (k > f.degree) return 0.0;
          return binomial(f.degree, k).template convert_to<double>() * std::pow(x, f.degree - k);
        } else if constexpr (std::is_same_v<T, Resolvent>) {
          Complex d = x - f.lambda();
          if (d == Complex(0)) throw DomainError("evaluation at the resolvent pole");
          double c = binomial(f.power + k - 1, k).template convert_to<double>();
          return (k % 2 ? -c : c) * std::pow(d, -(f.power + k));
        } else if constexpr (std::is_same_v<T, SeparableProduct>) {
          return f.factors[0].taylor(k, x);
        } else {
          if (f.max_order >= 0 && k > f.max_order)
            throw DomainError(f.name + ": derivative of order " + std::to_string(k) + " unavailable");
          Complex at[1] = {x};
          int ord[1] = {k};
          return f.partial(at, ord) / factorial(k);
        }
      },
      v_);
}

Rational BaseFunction::taylor(int k, const Rational& x) const {
  require_univariate(*this);
  if (k < 0) throw ArityError("negative derivative order");
  if (!has_exact()) throw DomainError("no exact evaluation for " + describe());
  return std::visit(
      [&](const auto& f) -> Rational {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return k == 0 ? Rational(1) : Rational(0);
        } else if constexpr (std::is_same_v<T, Monomial>) {
          if (k > f.degree) return 0;
          Rational p = 1;
          for (int i = 0; i < f.degree - k; ++i) p *= x;
          return binomial(f.degree, k) * p;
        } else if constexpr (std::is_same_v<T, Resolvent>) {
          Rational d = x - f.lambda_re;
          if (d == 0) throw DomainError("evaluation at the resolvent pole");
          Rational p = 1;
          for (int i = 0; i < f.power + k; ++i) p /= d;
          Rational c = binomial(f.power + k - 1, k);
          return (k % 2 ? -c : c) * p;
        } else if constexpr (std::is_same_v<T, SeparableProduct>) {
          return f.factors[0].taylor(k, x);
        } else {
          Rational at[1] = {x};
          int ord[1] = {k};
          Rational fact = 1;
          for (int i = 2; i <= k; ++i) fact *= i;
          return f.partial_exact(at, ord) / fact;
        }
      },
      v_);
}

Complex BaseFunction::mixed_taylor(std::span<const Complex> at, std::span<const int> orders) const {
  if (static_cast<int>(at.size()) != arity() || orders.size() != at.size())
    throw ArityError("mixed_taylor: expected " + std::to_string(arity()) + " arguments");
  if (auto p = std::get_if<SeparableProduct>(&v_)) {
    Complex r = 1;
    for (std::size_t k = 0; k < at.size(); ++k) r *= p->factors[k].taylor(orders[k], at[k]);
    return r;
  }
  if (auto b = std::get_if<BlackBox>(&v_)) {
    int total = std::accumulate(orders.begin(), orders.end(), 0);
    if (b->max_order >= 0 && total > b->max_order)
      throw DomainError(b->name + ": derivative of order " + std::to_string(total) + " unavailable");
    double denom = 1;
    for (int r : orders) denom *= factorial(r);
    return b->partial(at, orders) / denom;
  }
  return taylor(orders[0], at[0]);
}

Rational BaseFunction::mixed_taylor(std::span<const Rational> at, std::span<const int> orders) const {
  if (static_cast<int>(at.size()) != arity() || orders.size() != at.size())
    throw ArityError("mixed_taylor: expected " + std::to_string(arity()) + " arguments");
  if (!has_exact()) throw DomainError("no exact evaluation for " + describe());
  if (auto p = std::get_if<SeparableProduct>(&v_)) {
    Rational r = 1;
    for (std::size_t k = 0; k < at.size(); ++k) r *= p->factors[k].taylor(orders[k], at[k]);
    return r;
  }
  if (auto b = std::get_if<BlackBox>(&v_)) {
    Rational denom = 1;
    for (int r : orders)
      for (int i = 2; i <= r; ++i) denom *= i;
    return b->partial_exact(at, orders) / denom;
  }
  return taylor(orders[0], at[0]);
}

Complex BaseFunction::operator()(std::span<const Complex> at) const {
  std::vector<int> zeros(at.size(), 0);
  return mixed_taylor(at, zeros);
}

Complex BaseFunction::operator()(Complex x) const { return taylor(0, x); }

}  // namespace rearrange
