#include "rearrange/variational.hpp"

#include "rearrange/errors.hpp"
#include "rearrange/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rearrange {

GradientCoefficients cm_coefficients(const SpectralExpr& T) {
  if (T.arity() != 1) throw ArityError("gradient coefficients need T of arity 1, got " + std::to_string(T.arity()));
  SpectralExpr K = -(T + cyclic(T));
  SpectralExpr H = face(0, K) + face(1, K) - last_face(K);
  return {K, H};
}

GradientCoefficients cm_part_factors(const SpectralExpr& T) {
  if (T.arity() != 1) throw ArityError("gradient coefficients need T of arity 1");
  SpectralExpr sym = T + cyclic(T);
  return {-sym, -(face(0, sym) + face(1, sym))};
}

GradientCoefficients cm_part_function(const SpectralExpr& T) {
  if (T.arity() != 1) throw ArityError("gradient coefficients need T of arity 1");
  return {SpectralExpr(T.symbol(), 1, T.slot_count()), cyclic(face(0, T)) + cyclic(cyclic(face(1, T)))};
}

void TraceExpr::add(const Key& factors, const SpectralExpr& f) {
  if (static_cast<int>(factors.size()) != f.arity() + 1)
    throw ArityError("trace term: " + std::to_string(factors.size()) + " factors for arity " + std::to_string(f.arity()));
  auto it = terms_.find(factors);
  if (it == terms_.end()) {
    if (!f.empty()) terms_.emplace(factors, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.empty()) terms_.erase(it);
}

std::string TraceExpr::to_string() const {
  std::string s;
  for (const auto& [key, f] : terms_) {
    if (!s.empty()) s += "\n";
    auto name = [](const Factor& x) {
      std::string b = x.direction ? "a" : "h";
      for (int k = 0; k < x.order; ++k) b = "D" + b;
      return b;
    };
    std::string args;
    for (std::size_t p = 0; p + 1 < key.size(); ++p) args += (p ? "," : "") + name(key[p]);
    s += "phi(S[" + rearrange::to_string(f) + "](" + args + ") " + name(key.back()) + ")";
  }
  return s;
}

TraceExpr vary(const TraceExpr& e) {
  TraceExpr out;
  for (const auto& [key, f] : e.terms()) {
    for (std::size_t p = 0; p < key.size(); ++p) {
      if (key[p].direction) continue;
      auto k2 = key;
      k2[p].direction = true;
      out.add(k2, f);
    }
    const int n = f.arity();
    for (int j = 0; j <= n; ++j) {
      auto k2 = key;
      k2.insert(k2.begin() + j, Factor{true, 0});
      out.add(k2, face(j, f));
    }
  }
  return out;
}

TraceExpr rotate_direction_last(const TraceExpr& e) {
  TraceExpr out;
  for (const auto& [key, f] : e.terms()) {
    auto k2 = key;
    SpectralExpr g = f;
    for (std::size_t r = 0; !k2.back().direction; ++r) {
      if (r == k2.size()) throw std::invalid_argument("trace term without a direction factor");
      // phi(S(f)(r_1..r_n) r_{n+1}) = phi(S(tau f)(r_2..r_{n+1}) r_1)
      std::rotate(k2.begin(), k2.begin() + 1, k2.end());
      g = cyclic(g);
    }
    out.add(k2, g);
  }
  return out;
}

TraceExpr integrate_by_parts(const TraceExpr& e) {
  TraceExpr done;
  TraceExpr work = e;
  while (!work.terms().empty()) {
    TraceExpr next;
    for (const auto& [key, f] : work.terms()) {
      if (!key.back().direction) throw std::invalid_argument("integrate_by_parts: last factor must involve a");
      if (key.back().order == 0) {
        done.add(key, f);
        continue;
      }
      // phi(Y nabla Z) = -phi(nabla(Y) Z)
      Factor last{true, key.back().order - 1};
      const int n = f.arity();
      for (int j = 0; j <= n; ++j) {
        TraceExpr::Key k2(key.begin(), key.end() - 1);
        k2.insert(k2.begin() + j, Factor{false, 1});
        k2.push_back(last);
        next.add(k2, -face(j, f));
      }
      for (int k = 0; k < n; ++k) {
        TraceExpr::Key k2(key.begin(), key.end() - 1);
        ++k2[static_cast<std::size_t>(k)].order;
        k2.push_back(last);
        next.add(k2, -f);
      }
    }
    work = next;
  }
  return done;
}

PipelineResult derive_gradient(const SpectralExpr& T) {
  if (T.arity() != 1) throw ArityError("derive_gradient needs T of arity 1");
  PipelineResult r{{}, {}, {}, {SpectralExpr(T.symbol(), 1, T.slot_count()), SpectralExpr(T.symbol(), 2, T.slot_count())}};
  r.functional.add({Factor{false, 1}, Factor{false, 1}}, T);
  r.varied = vary(r.functional);
  r.normalized = integrate_by_parts(rotate_direction_last(r.varied));
  const TraceExpr::Key k_key{Factor{false, 2}, Factor{true, 0}};
  const TraceExpr::Key h_key{Factor{false, 1}, Factor{false, 1}, Factor{true, 0}};
  for (const auto& [key, f] : r.normalized.terms()) {
    if (key == k_key) r.coefficients.K = f;
    else if (key == h_key) r.coefficients.H = f;
    else throw std::logic_error("derive_gradient: unexpected term " + r.normalized.to_string());
  }
  return r;
}

Complex functional_value(const MatrixContext& ctx, const SpectralExpr& T, const BaseFunction& base) {
  Matrix nh = ctx.nabla(ctx.h());
  std::vector<Matrix> args{nh};
  return ctx.trace(schwartz_apply(ctx, T, base, args) * nh);
}

Matrix gradient_assemble(const GradientCoefficients& c, const BaseFunction& base, const MatrixContext& ctx) {
  Matrix nh = ctx.nabla(ctx.h());
  std::vector<Matrix> one{ctx.nabla(nh)};
  std::vector<Matrix> two{nh, nh};
  return schwartz_apply(ctx, c.K, base, one) + schwartz_apply(ctx, c.H, base, two);
}

GradientCheck gradient_check(const SpectralExpr& T, const BaseFunction& base, const MatrixContext& ctx,
                             std::span<const Matrix> directions, double step) {
  GradientCheck out;
  Matrix grad = gradient_assemble(cm_coefficients(T), base, ctx);
  for (const auto& a : directions) {
    Complex fp = functional_value(ctx.with_h(ctx.h() + step * a), T, base);
    Complex fm = functional_value(ctx.with_h(ctx.h() - step * a), T, base);
    Complex fd = (fp - fm) / (2.0 * step);
    Complex pr = ctx.trace(grad * a);
    double rel = std::abs(fd - pr) / std::max(std::abs(fd), 1e-300);
    out.finite_differences.push_back(fd);
    out.pairings.push_back(pr);
    out.relative_errors.push_back(rel);
    out.max_relative_error = std::max(out.max_relative_error, rel);
  }
  return out;
}

std::vector<Matrix> hermitian_basis(int d) {
  std::vector<Matrix> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k) {
    Matrix e = Matrix::Zero(d, d);
    e(k, k) = 1;
    out.push_back(e);
  }
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      Matrix re = Matrix::Zero(d, d), im = Matrix::Zero(d, d);
      re(k, l) = re(l, k) = s;
      im(k, l) = Complex(0, s);
      im(l, k) = Complex(0, -s);
      out.push_back(re);
      out.push_back(im);
    }
  return out;
}

Matrix reconstruct_from_pairings(int d, const std::function<Complex(const Matrix&)>& pairing) {
  Matrix x = Matrix::Zero(d, d);
  for (const auto& a : hermitian_basis(d)) x += static_cast<double>(d) * pairing(a) * a;
  return x;
}

}  // namespace rearrange
