#include "rearrange/tensor.hpp"

#include "rearrange/errors.hpp"

namespace rearrange {

TensorExpr::TensorExpr(TensorBasis basis, int legs) : basis_(basis), legs_(legs) {
  if (legs < 1) throw ArityError("tensor needs at least one leg");
}

TensorExpr TensorExpr::element(TensorBasis basis, Exponents exps, const Rational& coeff) {
  TensorExpr t(basis, static_cast<int>(exps.size()));
  t.add(exps, coeff);
  return t;
}

void TensorExpr::add(const Exponents& exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != legs_) throw ArityError("tensor leg count mismatch");
  for (int e : exps)
    if (e < 0) throw ArityError("negative exponent in tensor");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorExpr::add(const TensorExpr& other, const Rational& coeff) {
  if (other.basis_ != basis_ || other.legs_ != legs_) throw ArityError("tensor shape mismatch");
  for (const auto& [e, c] : other.terms_) add(e, c * coeff);
}

Rational TensorExpr::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorExpr operator+(const TensorExpr& a, const TensorExpr& b) {
  TensorExpr r = a;
  r.add(b);
  return r;
}

TensorExpr operator-(const TensorExpr& a, const TensorExpr& b) {
  TensorExpr r = a;
  r.add(b, -1);
  return r;
}

TensorExpr operator*(const Rational& c, const TensorExpr& a) {
  TensorExpr r(a.basis(), a.legs());
  r.add(a, c);
  return r;
}

TensorExpr coproduct_power(TensorBasis basis, int power) {
  TensorExpr t(basis, 2);
  if (basis == TensorBasis::Monomial) {
    for (int a = 0; a <= power - 1; ++a) t.add({a, power - 1 - a}, 1);
  } else {
    for (int a = 1; a <= power; ++a) t.add({a, power + 1 - a}, -1);
  }
  return t;
}

TensorExpr coproduct(const BaseFunction& base) {
  if (auto m = std::get_if<Monomial>(&base.variant()))
    return coproduct_power(TensorBasis::Monomial, m->degree);
  if (auto r = std::get_if<Resolvent>(&base.variant()))
    return coproduct_power(TensorBasis::Resolvent, r->power);
  throw DomainError("coproduct of " + base.describe() + " requires completed tensor product");
}

namespace {

void check_leg(const TensorExpr& t, int leg, int last) {
  if (leg < 0 || leg > last) throw ArityError("tensor leg " + std::to_string(leg) + " out of range");
  (void)t;
}

}  // namespace

TensorExpr coproduct_at(const TensorExpr& t, int leg) {
  check_leg(t, leg, t.legs() - 1);
  TensorExpr out(t.basis(), t.legs() + 1);
  for (const auto& [e, c] : t.terms()) {
    const TensorExpr split = coproduct_power(t.basis(), e[leg]);
    for (const auto& [pair, d] : split.terms()) {
      TensorExpr::Exponents ne(e.begin(), e.begin() + leg);
      ne.push_back(pair[0]);
      ne.push_back(pair[1]);
      ne.insert(ne.end(), e.begin() + leg + 1, e.end());
      out.add(ne, c * d);
    }
  }
  return out;
}

TensorExpr contract_legs(const TensorExpr& t, int leg) {
  check_leg(t, leg, t.legs() - 2);
  TensorExpr out(t.basis(), t.legs() - 1);
  for (const auto& [e, c] : t.terms()) {
    auto ne = e;
    ne[leg] += ne[leg + 1];
    ne.erase(ne.begin() + leg + 1);
    out.add(ne, c);
  }
  return out;
}

TensorExpr contract_last_into_first(const TensorExpr& t) {
  if (t.legs() < 2) throw ArityError("extra degeneracy needs two legs");
  TensorExpr out(t.basis(), t.legs() - 1);
  for (const auto& [e, c] : t.terms()) {
    auto ne = e;
    ne[0] += ne.back();
    ne.pop_back();
    out.add(ne, c);
  }
  return out;
}

TensorExpr rotate_legs(const TensorExpr& t, int times) {
  int n = t.legs();
  int k = ((times % n) + n) % n;
  TensorExpr out(t.basis(), n);
  for (const auto& [e, c] : t.terms()) {
    TensorExpr::Exponents ne(e.size());
    for (int i = 0; i < n; ++i) ne[(i + k) % n] = e[i];
    out.add(ne, c);
  }
  return out;
}

TensorExpr multiply_leg(const TensorExpr& t, int leg, int power) {
  check_leg(t, leg, t.legs() - 1);
  TensorExpr out(t.basis(), t.legs());
  for (const auto& [e, c] : t.terms()) {
    auto ne = e;
    ne[leg] += power;
    out.add(ne, c);
  }
  return out;
}

TensorExpr differentiate_leg(const TensorExpr& t, int leg) {
  check_leg(t, leg, t.legs() - 1);
  TensorExpr out(t.basis(), t.legs());
  for (const auto& [e, c] : t.terms()) {
    auto ne = e;
    int p = e[leg];
    if (p == 0) continue;
    if (t.basis() == TensorBasis::Monomial) {
      ne[leg] = p - 1;
      out.add(ne, c * p);
    } else {
      ne[leg] = p + 1;
      out.add(ne, -c * p);
    }
  }
  return out;
}

TensorExpr tensor_product(const TensorExpr& a, const TensorExpr& b) {
  if (a.basis() != b.basis()) throw ArityError("tensor basis mismatch");
  TensorExpr out(a.basis(), a.legs() + b.legs());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      auto e = ea;
      e.insert(e.end(), eb.begin(), eb.end());
      out.add(e, ca * cb);
    }
  return out;
}

Complex evaluate(const TensorExpr& t, std::span<const Complex> pts, Complex lambda) {
  if (static_cast<int>(pts.size()) != t.legs()) throw ArityError("tensor evaluation: wrong point count");
  Complex sum = 0;
  for (const auto& [e, c] : t.terms()) {
    Complex v = c.convert_to<double>();
    for (int k = 0; k < t.legs(); ++k) {
      Complex base = t.basis() == TensorBasis::Monomial ? pts[k] : 1.0 / (pts[k] - lambda);
      v *= std::pow(base, e[k]);
    }
    sum += v;
  }
  return sum;
}

std::string to_string(const TensorExpr& t) {
  if (t.empty()) return "0";
  std::string out;
  bool first = true;
  const char* sym = t.basis() == TensorBasis::Monomial ? "x" : "w";
  for (const auto& [e, c] : t.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1) out += format_rational(mag) + "*";
    for (std::size_t k = 0; k < e.size(); ++k)
      out += (k ? "(x)" : "") + std::string(sym) + "^" + std::to_string(e[k]);
    first = false;
  }
  return out;
}

}  // namespace rearrange
