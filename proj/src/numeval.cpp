#include "rearrange/numeval.hpp"

#include "rearrange/errors.hpp"

#include <algorithm>
#include <map>

namespace rearrange {

namespace {

bool node_less(const Complex& a, const Complex& b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}
bool node_less(const Rational& a, const Rational& b) { return a < b; }

template <class T>
std::vector<T> sorted_nodes(std::span<const T> nodes) {
  if (nodes.empty()) throw ArityError("divided difference needs at least one node");
  std::vector<T> z(nodes.begin(), nodes.end());
  std::sort(z.begin(), z.end(), [](const T& a, const T& b) { return node_less(a, b); });
  return z;
}

template <class T>
DividedDifferenceTable<T> build_table(const BaseFunction& f, std::span<const T> nodes) {
  DividedDifferenceTable<T> t;
  t.nodes = sorted_nodes(nodes);
  const std::size_t n = t.nodes.size();
  t.table.emplace_back();
  for (const auto& z : t.nodes) t.table[0].push_back(f.taylor(0, z));
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<T> row;
    for (std::size_t i = 0; i + k < n; ++i) {
      const T& a = t.nodes[i];
      const T& b = t.nodes[i + k];
      if (a == b)
        row.push_back(f.taylor(static_cast<int>(k), a));
      else
        row.push_back((t.table[k - 1][i + 1] - t.table[k - 1][i]) / (b - a));
    }
    t.table.push_back(std::move(row));
  }
  return t;
}

// Same recursion as build_table, run on sparse combinations of seeds
// (node group, derivative order) instead of numbers.
template <class T>
std::vector<FunctionalEntry<T>> build_functional(std::span<const T> nodes) {
  auto z = sorted_nodes(nodes);
  const std::size_t n = z.size();
  std::vector<std::size_t> group(n);
  for (std::size_t i = 0; i < n; ++i) group[i] = (i > 0 && z[i] == z[i - 1]) ? group[i - 1] : i;
  using Key = std::pair<std::size_t, int>;
  using Combo = std::map<Key, T>;
  std::vector<Combo> prev(n);
  for (std::size_t i = 0; i < n; ++i) prev[i][{group[i], 0}] = T(1);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Combo> cur;
    for (std::size_t i = 0; i + k < n; ++i) {
      Combo c;
      if (z[i] == z[i + k]) {
        c[{group[i], static_cast<int>(k)}] = T(1);
      } else {
        T inv = T(1) / (z[i + k] - z[i]);
        for (const auto& [key, w] : prev[i + 1]) c[key] += w * inv;
        for (const auto& [key, w] : prev[i]) c[key] -= w * inv;
      }
      cur.push_back(std::move(c));
    }
    prev = std::move(cur);
  }
  std::vector<FunctionalEntry<T>> out;
  for (const auto& [key, w] : prev[0])
    if (w != T(0)) out.push_back({z[key.first], key.second, w});
  return out;
}

template <class T>
T eval_term_impl(const BracketTerm& term, const BaseFunction& base, std::span<const T> pts) {
  if (static_cast<int>(pts.size()) != term.arity() + 1)
    throw ArityError("point assignment has " + std::to_string(pts.size()) + " values, term needs " +
                     std::to_string(term.arity() + 1));
  if (base.arity() != term.slot_count())
    throw ArityError("base function of arity " + std::to_string(base.arity()) +
                     " cannot fill " + std::to_string(term.slot_count()) + " slots");
  auto slot_nodes = [&](int k) {
    std::vector<T> nodes;
    for (int v : term.slot(k)) nodes.push_back(pts[static_cast<std::size_t>(v)]);
    return nodes;
  };
  if (base.is_univariate()) {
    auto nodes = slot_nodes(0);
    return build_table<T>(base, nodes).value();
  }
  if (auto p = std::get_if<SeparableProduct>(&base.variant())) {
    T r(1);
    for (int k = 0; k < term.slot_count(); ++k) {
      auto nodes = slot_nodes(k);
      r *= build_table<T>(p->factors[static_cast<std::size_t>(k)], nodes).value();
    }
    return r;
  }
  // General multivariate: tensor product of the per-slot functionals.
  std::vector<std::vector<FunctionalEntry<T>>> fun;
  for (int k = 0; k < term.slot_count(); ++k) {
    auto nodes = slot_nodes(k);
    fun.push_back(build_functional<T>(nodes));
  }
  const std::size_t slots = fun.size();
  std::vector<std::size_t> idx(slots, 0);
  std::vector<T> at(slots);
  std::vector<int> orders(slots);
  T sum(0);
  while (true) {
    T w(1);
    for (std::size_t k = 0; k < slots; ++k) {
      const auto& e = fun[k][idx[k]];
      at[k] = e.node;
      orders[k] = e.order;
      w *= e.weight;
    }
    sum += w * base.mixed_taylor(std::span<const T>(at), std::span<const int>(orders));
    std::size_t k = 0;
    while (k < slots && ++idx[k] == fun[k].size()) idx[k++] = 0;
    if (k == slots) break;
  }
  return sum;
}

}  // namespace

DividedDifferenceTable<Complex> divided_difference_table(const BaseFunction& f,
                                                         std::span<const Complex> nodes) {
  return build_table<Complex>(f, nodes);
}
DividedDifferenceTable<Rational> divided_difference_table(const BaseFunction& f,
                                                          std::span<const Rational> nodes) {
  return build_table<Rational>(f, nodes);
}

Complex divided_difference(const BaseFunction& f, std::span<const Complex> nodes) {
  return build_table<Complex>(f, nodes).value();
}
Rational divided_difference(const BaseFunction& f, std::span<const Rational> nodes) {
  return build_table<Rational>(f, nodes).value();
}

std::vector<FunctionalEntry<Complex>> divided_difference_functional(std::span<const Complex> nodes) {
  return build_functional<Complex>(nodes);
}
std::vector<FunctionalEntry<Rational>> divided_difference_functional(std::span<const Rational> nodes) {
  return build_functional<Rational>(nodes);
}

Complex eval_bracket_term(const BracketTerm& term, const BaseFunction& base,
                          std::span<const Complex> pts) {
  return eval_term_impl<Complex>(term, base, pts);
}
Rational eval_bracket_term(const BracketTerm& term, const BaseFunction& base,
                           std::span<const Rational> pts) {
  if (!base.has_exact()) throw DomainError("no exact evaluation for " + base.describe());
  return eval_term_impl<Rational>(term, base, pts);
}

Complex eval_expr(const SpectralExpr& expr, const BaseFunction& base, std::span<const Complex> pts) {
  Complex s = 0;
  for (const auto& [t, c] : expr.terms()) s += c.convert_to<double>() * eval_bracket_term(t, base, pts);
  return s;
}

Rational eval_expr(const SpectralExpr& expr, const BaseFunction& base, std::span<const Rational> pts) {
  Rational s = 0;
  for (const auto& [t, c] : expr.terms()) s += c * eval_bracket_term(t, base, pts);
  return s;
}

double eval_expr_scale(const SpectralExpr& expr, const BaseFunction& base,
                       std::span<const Complex> pts) {
  double s = 0;
  for (const auto& [t, c] : expr.terms())
    s += std::abs(c.convert_to<double>() * eval_bracket_term(t, base, pts));
  return s;
}

CompositionResidual composition_rule_check(const BaseFunction& f, std::span<const Complex> ys,
                                           std::span<const Complex> xs) {
  Complex lhs = 0;
  for (std::size_t l = 0; l < xs.size(); ++l) {
    std::vector<Complex> nodes(ys.begin(), ys.end());
    nodes.push_back(xs[l]);
    Complex g = divided_difference(f, nodes);
    Complex denom = 1;
    for (std::size_t s = 0; s < xs.size(); ++s)
      if (s != l) {
        if (xs[s] == xs[l]) throw DomainError("composition_rule_check needs distinct x nodes");
        denom *= xs[l] - xs[s];
      }
    lhs += g / denom;
  }
  std::vector<Complex> all(ys.begin(), ys.end());
  all.insert(all.end(), xs.begin(), xs.end());
  Complex rhs = divided_difference(f, all);
  double abs_err = std::abs(lhs - rhs);
  return {lhs, rhs, abs_err, relative_error(lhs, rhs)};
}

double relative_error(Complex a, Complex b, double scale) {
  double d = std::max({std::abs(a), std::abs(b), scale, 1e-300});
  return std::abs(a - b) / d;
}

std::vector<double> separated_points(int count, std::mt19937_64& rng, double lo, double hi,
                                     double gap) {
  double slack = (hi - lo) - gap * (count - 1);
  if (count < 0 || slack < 0) throw ArityError("cannot place that many separated points");
  std::uniform_real_distribution<double> u(0.0, slack);
  std::vector<double> off(static_cast<std::size_t>(count));
  for (auto& o : off) o = u(rng);
  std::sort(off.begin(), off.end());
  std::vector<double> pts;
  for (int k = 0; k < count; ++k) pts.push_back(lo + gap * k + off[static_cast<std::size_t>(k)]);
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

std::vector<Rational> separated_rationals(int count, std::mt19937_64& rng, int den, int lo, int hi,
                                          Rational gap) {
  Rational slack = Rational(hi - lo) - gap * (count - 1);
  if (count < 0 || slack < 0) throw ArityError("cannot place that many separated points");
  long units = static_cast<long>((slack * den).convert_to<double>());
  std::uniform_int_distribution<long> u(0, units);
  std::vector<long> off(static_cast<std::size_t>(count));
  for (auto& o : off) o = u(rng);
  std::sort(off.begin(), off.end());
  std::vector<Rational> pts;
  for (int k = 0; k < count; ++k)
    pts.push_back(Rational(lo) + gap * k + Rational(off[static_cast<std::size_t>(k)], den));
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

PointAssignment to_complex(std::span<const double> xs) { return {xs.begin(), xs.end()}; }

PointAssignment to_complex(std::span<const Rational> xs) {
  PointAssignment out;
  for (const auto& x : xs) out.emplace_back(x.convert_to<double>());
  return out;
}

}  // namespace rearrange
