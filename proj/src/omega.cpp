#include "rearrange/omega.hpp"

#include "rearrange/errors.hpp"
#include "rearrange/numeval.hpp"

#include <random>

namespace rearrange::omega {

TensorExpr term(const Index& alpha, const Rational& coeff) {
  for (int a : alpha)
    if (a < 1) throw ArityError("omega index entries must be positive");
  return TensorExpr::element(TensorBasis::Resolvent, alpha, coeff);
}

TensorExpr ones(int n) { return term(Index(static_cast<std::size_t>(n) + 1, 1)); }

namespace {

void require_resolvent(const TensorExpr& e) {
  if (e.basis() != TensorBasis::Resolvent) throw ArityError("omega calculus needs the resolvent basis");
}

int arity_of(const TensorExpr& e) { return e.legs() - 1; }

}  // namespace

TensorExpr face(int j, const TensorExpr& e) {
  require_resolvent(e);
  Generator::face(j).validate(arity_of(e));
  return coproduct_at(e, j);
}

TensorExpr degeneracy(int j, const TensorExpr& e) {
  require_resolvent(e);
  const int n = arity_of(e);
  Generator::degeneracy(j).validate(n);
  return j == n ? contract_last_into_first(e) : contract_legs(e, j);
}

TensorExpr cyclic(const TensorExpr& e) {
  require_resolvent(e);
  return rotate_legs(e, -1);
}

TensorExpr partial(int i, const TensorExpr& e) {
  require_resolvent(e);
  Generator::partial(i).validate(arity_of(e));
  return differentiate_leg(e, i);
}

TensorExpr apply(const Generator& g, const TensorExpr& e) {
  const int n = arity_of(e);
  g.validate(n);
  switch (g.kind) {
    case GeneratorKind::Face: return face(g.index, e);
    case GeneratorKind::Degeneracy: return degeneracy(g.index, e);
    case GeneratorKind::Cyclic: return cyclic(e);
    case GeneratorKind::CyclicInverse: return rotate_legs(e, 1);
    case GeneratorKind::LastFace: return cyclic(face(0, e));
    case GeneratorKind::Partial: return partial(g.index, e);
    case GeneratorKind::DualFace: return degeneracy(g.index, e);
    case GeneratorKind::DualDegeneracy:
      return g.index + 1 <= n ? face(g.index + 1, e) : cyclic(face(0, e));
    case GeneratorKind::DualCyclic: return rotate_legs(e, 1);
  }
  throw ArityError("unknown generator");
}

TensorExpr apply_word(const OperatorWord& w, const TensorExpr& e) {
  TensorExpr cur = e;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

DifferentialRelation differential_relation_check(const Index& alpha) {
  TensorExpr lhs = term(alpha);
  TensorExpr rhs = ones(static_cast<int>(alpha.size()) - 1);
  Rational c = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const int k = alpha[j] - 1;
    for (int r = 0; r < k; ++r) rhs = partial(static_cast<int>(j), rhs);
    Rational fact = 1;
    for (int r = 2; r <= k; ++r) fact *= r;
    c *= (k % 2 ? Rational(-1) : Rational(1)) / fact;
  }
  rhs = c * rhs;
  return {lhs, rhs, lhs == rhs};
}

double omega_vs_generic(const Index& alpha, const OperatorWord& w, int samples, std::uint64_t seed) {
  const int n = static_cast<int>(alpha.size()) - 1;
  const int m = w.target(n);
  TensorExpr idx = apply_word(w, term(alpha));
  std::vector<BaseFunction> factors;
  for (int a : alpha) factors.push_back(BaseFunction::resolvent(2, 1, a));
  BaseFunction base = BaseFunction::separable(std::move(factors));
  SpectralExpr sym = rearrange::apply_word(w, SpectralExpr::generic(n));
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    auto pts = to_complex(separated_points(m + 1, rng));
    Complex a = evaluate(idx, pts);
    Complex b = eval_expr(sym, base, pts);
    worst = std::max(worst, relative_error(a, b, eval_expr_scale(sym, base, pts)));
  }
  return worst;
}

SecondDerivativeDemo second_derivative_decomposition_demo() {
  using G = Generator;
  const TensorExpr w = term({1});
  SecondDerivativeDemo d{word({G::degeneracy(0), G::face(0), G::degeneracy(0), G::face(0)}), {}, false, w, w, w, false};
  OperatorWord w1 = word({G::degeneracy(0), G::degeneracy(0), G::face(0), G::face(0)});
  OperatorWord w2 = word({G::degeneracy(0), G::degeneracy(0), G::face(1), G::face(0)});
  d.rewritten = OperatorSum::single(w1).plus(1, w2);
  SpectralExpr f = SpectralExpr::generic(0);
  d.symbolic_identity = rearrange::apply_word(d.word, f) == apply_sum(d.rewritten, f);
  d.direct = apply_word(d.word, w);
  d.first = apply_word(w1, w);
  d.second = apply_word(w2, w);
  const TensorExpr target = term({3}, 2);
  d.equals_two_omega_cubed = d.direct == target && d.first + d.second == target;
  return d;
}

std::vector<Index> indices_up_to(int total) {
  std::vector<Index> out;
  Index cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int a = 1; a <= left; ++a) {
      cur.push_back(a);
      self(self, left - a);
      cur.pop_back();
    }
  };
  rec(rec, total);
  return out;
}

}  // namespace rearrange::omega
