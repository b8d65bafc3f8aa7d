#include "rearrange/soundness.hpp"

#include "rearrange/matrixcalc.hpp"
#include "rearrange/numeval.hpp"
#include "rearrange/oracle.hpp"

#include <algorithm>
#include <random>

namespace rearrange {

bool SoundnessReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
}

std::size_t SoundnessReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; }));
}

double SoundnessReport::worst() const {
  double w = 0;
  for (const auto& c : cases) w = std::max(w, c.relative_error);
  return w;
}

std::vector<Rational> ridge_weights(int count) {
  std::vector<Rational> w;
  for (int k = 0; k < count; ++k) w.emplace_back(k + 2, 2 * (count + 1));
  return w;
}

namespace {

struct Basis {
  std::string name;
  BaseFunction profile;
};

std::vector<Basis> profiles() {
  return {{"exp", BaseFunction::exponential()},
          {"x^5", BaseFunction::monomial(5)},
          {"omega(2+i)", BaseFunction::resolvent(2, 1, 1)}};
}

// Polynomial with double coefficients, for evaluation at many float points.
SpectralKernel polynomial_kernel(const oracle::Polynomial& p) {
  std::vector<std::pair<std::vector<int>, double>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, c.convert_to<double>());
  return {p.arity(), [terms](std::span<const Complex> x) {
            Complex s = 0;
            for (const auto& [e, c] : terms) {
              Complex v = c;
              for (std::size_t k = 0; k < e.size(); ++k)
                for (int r = 0; r < e[k]; ++r) v *= x[k];
              s += v;
            }
            return s;
          }};
}

}  // namespace

SoundnessReport numeric_soundness(const RelationReport& relations, std::uint64_t seed, double tol) {
  SoundnessReport rep{seed, tol, {}};
  std::mt19937_64 rng(seed);
  auto instances = relations.instances;
  std::sort(instances.begin(), instances.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  for (const auto& inst : instances) {
    const auto weights = ridge_weights(inst.n + 1);
    const int m = inst.lhs.arity();
    for (const auto& b : profiles()) {
      SoundnessCase c{inst.key(), b.name};
      BaseFunction base = BaseFunction::ridge(b.profile, weights);
      auto pts = to_complex(separated_points(m + 1, rng));
      oracle::Function f = oracle::from_base(base);
      const Complex vals[4] = {eval_expr(inst.lhs, base, pts), eval_expr(inst.rhs, base, pts),
                               oracle::evaluate(inst.lhs_ops, f, pts), oracle::evaluate(inst.rhs_ops, f, pts)};
      const double scale = std::max(eval_expr_scale(inst.lhs, base, pts), eval_expr_scale(inst.rhs, base, pts));
      for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) c.relative_error = std::max(c.relative_error, relative_error(vals[p], vals[q], scale));
      if (base.has_exact()) {
        c.exact_checked = true;
        auto poly = oracle::ridge_power(weights, 5);
        auto pl = oracle::apply(inst.lhs_ops, poly);
        auto pr = oracle::apply(inst.rhs_ops, poly);
        auto rpts = separated_rationals(m + 1, rng);
        c.exact_ok = pl == pr && eval_expr(inst.lhs, base, rpts) == pl(rpts) && eval_expr(inst.rhs, base, rpts) == pr(rpts);
      }
      c.pass = c.relative_error <= tol && c.exact_ok;
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

SoundnessReport matrix_soundness(const RelationReport& relations, int d, int n_max, std::uint64_t seed, double tol) {
  SoundnessReport rep{seed, tol, {}};
  const MatrixContext ctx = MatrixContext::random(d, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto instances = relations.instances;
  std::sort(instances.begin(), instances.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  for (const auto& inst : instances) {
    if (inst.n > n_max) continue;
    const auto weights = ridge_weights(inst.n + 1);
    BaseFunction base = BaseFunction::ridge(BaseFunction::monomial(5), weights);
    auto poly = oracle::ridge_power(weights, 5);
    auto rho = random_matrices(d, inst.lhs.arity(), rng);
    const Matrix vals[4] = {schwartz_apply(ctx, inst.lhs, base, rho), schwartz_apply(ctx, inst.rhs, base, rho),
                            schwartz_apply(ctx, polynomial_kernel(oracle::apply(inst.lhs_ops, poly)), rho),
                            schwartz_apply(ctx, polynomial_kernel(oracle::apply(inst.rhs_ops, poly)), rho)};
    SoundnessCase c{inst.key(), "x^5"};
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) c.relative_error = std::max(c.relative_error, relative_difference(vals[p], vals[q]));
    c.pass = c.relative_error <= tol;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

}  // namespace rearrange
