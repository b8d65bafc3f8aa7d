#include "rearrange/modular.hpp"

#include "rearrange/errors.hpp"
#include "rearrange/numeval.hpp"
#include "rearrange/ops.hpp"

#include <algorithm>
#include <random>

namespace rearrange {

namespace {

int leading_sign(const LinearForm& f) {
  for (const auto& c : f)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

LinearForm negated(LinearForm f) {
  for (auto& c : f) c = -c;
  return f;
}

std::string form_string(const LinearForm& f, const char* var, int offset) {
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Rational& c = f[k];
    if (c == 0) continue;
    std::string name = var + std::to_string(static_cast<int>(k) + offset);
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    Rational a = c < 0 ? Rational(-c) : c;
    s += (a == 1 ? "" : format_rational(a) + "*") + name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ModularExpr::ModularExpr(Coordinates coords, int n) : coords_(coords), n_(n) {
  if (n < 0) throw ArityError("negative arity");
}

int ModularExpr::variables() const { return coords_ == Coordinates::Position ? n_ + 1 : n_; }

void ModularExpr::add(LinearForm argument, std::vector<LinearForm> denominators, const Rational& coeff) {
  const auto width = static_cast<std::size_t>(variables());
  if (argument.size() != width) throw ArityError("linear form of the wrong width");
  Rational c = coeff;
  for (auto& d : denominators) {
    if (d.size() != width) throw ArityError("linear form of the wrong width");
    int s = leading_sign(d);
    if (s == 0) throw DomainError("zero denominator");
    if (s < 0) {
      d = negated(d);
      c = -c;
    }
  }
  std::sort(denominators.begin(), denominators.end());
  if (c == 0) return;
  ModularTerm key{std::move(argument), std::move(denominators)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Complex ModularExpr::evaluate(const BaseFunction& profile, std::span<const Complex> vars) const {
  if (static_cast<int>(vars.size()) != variables()) throw ArityError("wrong number of coordinates");
  auto apply = [&](const LinearForm& f) {
    Complex s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += f[k].convert_to<double>() * vars[k];
    return s;
  };
  Complex total = 0;
  for (const auto& [t, c] : terms_) {
    Complex v = c.convert_to<double>() * profile(apply(t.argument));
    for (const auto& d : t.denominators) v /= apply(d);
    total += v;
  }
  return total;
}

std::string ModularExpr::to_string() const {
  if (terms_.empty()) return "0";
  const char* var = coords_ == Coordinates::Position ? "x" : "y";
  const int offset = coords_ == Coordinates::Position ? 0 : 1;
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (s.empty()) s += c < 0 ? "- " : "";
    else s += c < 0 ? " - " : " + ";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) s += format_rational(a) + "*";
    s += "Kt(" + form_string(t.argument, var, offset) + ")";
    for (const auto& d : t.denominators) s += "/(" + form_string(d, var, offset) + ")";
  }
  return s;
}

ModularExpr expand_differences(const SpectralExpr& e) {
  if (e.slot_count() != 2) throw ArityError("modular expansion needs a two-argument symbol");
  const int n = e.arity();
  ModularExpr out(Coordinates::Position, n);
  const auto width = static_cast<std::size_t>(n) + 1;
  auto diff = [&](int p, int q) {  // x_p - x_q
    LinearForm f(width, Rational(0));
    f[static_cast<std::size_t>(p)] += 1;
    f[static_cast<std::size_t>(q)] -= 1;
    return f;
  };
  for (const auto& [term, coeff] : e.terms()) {
    const Slot& s0 = term.slot(0);
    const Slot& s1 = term.slot(1);
    for (const Slot* s : {&s0, &s1}) {
      Slot sorted = *s;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("confluent slot has no difference-quotient expansion");
    }
    // g[y_0..y_k] = sum_i g(y_i) / prod_{l != i} (y_i - y_l), once per slot
    for (int p : s0)
      for (int q : s1) {
        std::vector<LinearForm> dens;
        for (int l : s0)
          if (l != p) dens.push_back(diff(p, l));
        for (int l : s1)
          if (l != q) dens.push_back(diff(q, l));
        out.add(diff(q, p), std::move(dens), coeff);
      }
  }
  return out;
}

namespace {

LinearForm position_to_difference(const LinearForm& c) {
  Rational total = 0;
  for (const auto& v : c) total += v;
  if (total != 0) throw DomainError("form is not translation invariant");
  const std::size_t n = c.size() - 1;
  LinearForm out(n, Rational(0));
  Rational tail = 0;
  for (std::size_t k = n; k >= 1; --k) {
    tail += c[k];
    out[k - 1] = tail;
  }
  return out;
}

LinearForm difference_to_position(const LinearForm& e) {
  const std::size_t n = e.size();
  LinearForm out(n + 1, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    out[k] += e[k - 1];
    out[k - 1] -= e[k - 1];
  }
  return out;
}

template <class F>
ModularExpr convert(const ModularExpr& e, Coordinates to, F&& map) {
  ModularExpr out(to, e.n());
  for (const auto& [t, c] : e.terms()) {
    std::vector<LinearForm> dens;
    for (const auto& d : t.denominators) dens.push_back(map(d));
    out.add(map(t.argument), std::move(dens), c);
  }
  return out;
}

}  // namespace

ModularExpr to_modular(const ModularExpr& position) {
  if (position.coordinates() != Coordinates::Position) throw std::invalid_argument("already in difference coordinates");
  return convert(position, Coordinates::Difference, position_to_difference);
}

ModularExpr to_modular(const SpectralExpr& e) { return to_modular(expand_differences(e)); }

ModularExpr from_modular(const ModularExpr& modular) {
  if (modular.coordinates() != Coordinates::Difference) throw std::invalid_argument("not in difference coordinates");
  return convert(modular, Coordinates::Position, difference_to_position);
}

ModularExpr apply_evenness(const ModularExpr& e) {
  ModularExpr out(e.coordinates(), e.n());
  for (const auto& [t, c] : e.terms())
    out.add(leading_sign(t.argument) < 0 ? negated(t.argument) : t.argument, t.denominators, c);
  return out;
}

EvenComparison cm_modular_compare(const BaseFunction& Kt, int samples, std::uint64_t seed) {
  if (!Kt.is_univariate()) throw ArityError("Kt must be a one-variable function");
  EvenComparison out;
  SpectralExpr K = SpectralExpr::generic(1, "K");
  SpectralExpr H = face(0, K) + face(1, K) - last_face(K);
  ModularExpr m = to_modular(H);
  out.closed = apply_evenness(m);
  BaseFunction base = BaseFunction::ridge(Kt, {Rational(-1), Rational(1)});

  std::mt19937_64 rng(seed);
  out.even = true;
  for (int s = 0; s < samples; ++s) {
    auto xs = to_complex(separated_points(3, rng));
    std::vector<Complex> ys{xs[1] - xs[0], xs[2] - xs[1]};
    for (const auto& y : ys) {
      Complex a = Kt(y), b = Kt(-y);
      if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) out.even = false;
    }
    Complex v0 = eval_expr(H, base, xs);
    double scale = eval_expr_scale(H, base, xs);
    out.residual_modular = std::max(out.residual_modular, relative_error(v0, m.evaluate(Kt, ys), scale));
    out.residual_even = std::max(out.residual_even, relative_error(v0, out.closed.evaluate(Kt, ys), scale));
  }
  return out;
}

}  // namespace rearrange
