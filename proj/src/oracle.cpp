#include "rearrange/oracle.hpp"

#include "rearrange/errors.hpp"

#include <cmath>
#include <numbers>

namespace rearrange::oracle {

namespace {

constexpr int kCirclePoints = 32;
constexpr double kRadius = 0.125;

using Vec = std::vector<Complex>;

// d/dz g at z by the trapezoidal Cauchy integral.
Complex derivative(const std::function<Complex(Complex)>& g, Complex z) {
  Complex s = 0;
  for (int k = 0; k < kCirclePoints; ++k) {
    Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / kCirclePoints);
    s += g(z + kRadius * u) / u;
  }
  return s / (kRadius * kCirclePoints);
}

Function face_fn(int j, const Function& f) {
  return {f.arity + 1, [j, f](std::span<const Complex> x) {
            Vec y;
            for (int k = 0; k <= f.arity + 1; ++k)
              if (k != j + 1) y.push_back(x[k]);
            const Complex a = x[j], b = x[j + 1];
            auto g = [&](Complex z) {
              Vec w = y;
              w[j] = z;
              return f(w);
            };
            if (a == b) return derivative(g, a);
            return (g(a) - g(b)) / (a - b);
          }};
}

Function degeneracy_fn(int j, const Function& f) {
  const int m = f.arity;
  return {m - 1, [j, m, f](std::span<const Complex> x) {
            Vec y;
            if (j == m) {
              y.assign(x.begin(), x.end());
              y.push_back(x[0]);
            } else {
              for (int k = 0; k <= j; ++k) y.push_back(x[k]);
              for (int k = j; k <= m - 1; ++k) y.push_back(x[k]);
            }
            return f(y);
          }};
}

// tau f(x_0..x_m) = f(x_m, x_0, ..., x_{m-1}).
Function cyclic_fn(const Function& f, bool inverse) {
  const int m = f.arity;
  return {m, [m, f, inverse](std::span<const Complex> x) {
            Vec y(static_cast<std::size_t>(m) + 1);
            for (int k = 0; k <= m; ++k)
              y[k] = inverse ? x[(k + 1) % (m + 1)] : x[(k + m) % (m + 1)];
            return f(y);
          }};
}

Function partial_fn(int i, const Function& f) {
  return {f.arity, [i, f](std::span<const Complex> x) {
            Vec y(x.begin(), x.end());
            return derivative(
                [&](Complex z) {
                  Vec w = y;
                  w[i] = z;
                  return f(w);
                },
                y[i]);
          }};
}

}  // namespace

Function from_base(const BaseFunction& base) {
  return {base.arity() - 1, [base](std::span<const Complex> x) { return base(x); }};
}

Function apply(const Generator& g, const Function& f) {
  g.validate(f.arity);
  switch (g.kind) {
    case GeneratorKind::Face: return face_fn(g.index, f);
    case GeneratorKind::Degeneracy:
    case GeneratorKind::DualFace: return degeneracy_fn(g.index, f);
    case GeneratorKind::Cyclic: return cyclic_fn(f, false);
    case GeneratorKind::CyclicInverse:
    case GeneratorKind::DualCyclic: return cyclic_fn(f, true);
    case GeneratorKind::LastFace: return cyclic_fn(face_fn(0, f), false);
    case GeneratorKind::Partial: return partial_fn(g.index, f);
    case GeneratorKind::DualDegeneracy:
      return g.index + 1 <= f.arity ? face_fn(g.index + 1, f) : cyclic_fn(face_fn(0, f), false);
  }
  throw ArityError("unknown generator");
}

Function apply(const OperatorWord& w, const Function& f) {
  Function cur = f;
  for (std::size_t k = w.letters().size(); k-- > 0;) cur = apply(w.letters()[k], cur);
  return cur;
}

Complex evaluate(const OperatorSum& s, const Function& f, std::span<const Complex> pts) {
  Complex sum = 0;
  for (const auto& [c, w] : s.terms) sum += c.convert_to<double>() * apply(w, f)(pts);
  return sum;
}

// ---------------------------------------------------------------- polynomials

void Polynomial::add(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != arity_ + 1) throw ArityError("polynomial exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add(const Polynomial& p, const Rational& c) {
  if (p.arity_ != arity_) throw ArityError("polynomial arity mismatch");
  for (const auto& [e, d] : p.terms_) add(e, c * d);
}

Rational Polynomial::operator()(std::span<const Rational> x) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int r = 0; r < e[k]; ++r) v *= x[k];
    s += v;
  }
  return s;
}

Polynomial ridge_power(const std::vector<Rational>& weights, int degree) {
  const int m = static_cast<int>(weights.size()) - 1;
  Polynomial p(m);
  p.add(Polynomial::Exponents(weights.size(), 0), 1);
  for (int d = 0; d < degree; ++d) {
    Polynomial q(m);
    for (const auto& [e, c] : p.terms())
      for (int k = 0; k <= m; ++k) {
        auto f = e;
        ++f[k];
        q.add(f, c * weights[k]);
      }
    p = q;
  }
  return p;
}

namespace {

Polynomial poly_face(int j, const Polynomial& p) {
  const int m = p.arity();
  Polynomial out(m + 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[j] == 0) continue;
    // x^k[a,b] = sum_{r+s=k-1} a^r b^s
    for (int r = 0; r <= e[j] - 1; ++r) {
      Polynomial::Exponents f;
      for (int k = 0; k < j; ++k) f.push_back(e[k]);
      f.push_back(r);
      f.push_back(e[j] - 1 - r);
      for (int k = j + 1; k <= m; ++k) f.push_back(e[k]);
      out.add(f, c);
    }
  }
  return out;
}

Polynomial poly_degeneracy(int j, const Polynomial& p) {
  const int m = p.arity();
  Polynomial out(m - 1);
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents f;
    if (j == m) {
      f.assign(e.begin(), e.end() - 1);
      f[0] += e[m];
    } else {
      for (int k = 0; k <= m; ++k) {
        if (k == j + 1) continue;
        f.push_back(e[k]);
      }
      f[j] += e[j + 1];
    }
    out.add(f, c);
  }
  return out;
}

Polynomial poly_cyclic(const Polynomial& p, bool inverse) {
  const int m = p.arity();
  Polynomial out(m);
  for (const auto& [e, c] : p.terms()) {
    // tau: argument k receives x_{k-1}, so x_{k-1} carries the old exponent of y_k.
    Polynomial::Exponents f(e.size());
    for (int k = 0; k <= m; ++k) {
      int target = inverse ? (k + 1) % (m + 1) : (k + m) % (m + 1);
      f[target] = e[k];
    }
    out.add(f, c);
  }
  return out;
}

Polynomial poly_partial(int i, const Polynomial& p) {
  Polynomial out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    auto f = e;
    --f[i];
    out.add(f, c * e[i]);
  }
  return out;
}

}  // namespace

Polynomial apply(const Generator& g, const Polynomial& p) {
  g.validate(p.arity());
  switch (g.kind) {
    case GeneratorKind::Face: return poly_face(g.index, p);
    case GeneratorKind::Degeneracy:
    case GeneratorKind::DualFace: return poly_degeneracy(g.index, p);
    case GeneratorKind::Cyclic: return poly_cyclic(p, false);
    case GeneratorKind::CyclicInverse:
    case GeneratorKind::DualCyclic: return poly_cyclic(p, true);
    case GeneratorKind::LastFace: return poly_cyclic(poly_face(0, p), false);
    case GeneratorKind::Partial: return poly_partial(g.index, p);
    case GeneratorKind::DualDegeneracy:
      return g.index + 1 <= p.arity() ? poly_face(g.index + 1, p)
                                      : poly_cyclic(poly_face(0, p), false);
  }
  throw ArityError("unknown generator");
}

Polynomial apply(const OperatorWord& w, const Polynomial& p) {
  Polynomial cur = p;
  for (std::size_t k = w.letters().size(); k-- > 0;) cur = apply(w.letters()[k], cur);
  return cur;
}

Polynomial apply(const OperatorSum& s, const Polynomial& p) {
  if (s.terms.empty()) throw ArityError("empty operator sum");
  Polynomial out(s.terms.front().second.target(p.arity()));
  for (const auto& [c, w] : s.terms) out.add(apply(w, p), c);
  return out;
}

}  // namespace rearrange::oracle
