// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include "rearrange/matrixcalc.hpp"
#include "rearrange/numeval.hpp"
#include "rearrange/omega.hpp"
#include "rearrange/ops.hpp"
#include "rearrange/simplicial.hpp"
#include "rearrange/soundness.hpp"
#include "rearrange/tensor.hpp"
#include "rearrange/variational.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace rearrange;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] criterion %2d  %-34s %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void run(int id, const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, name, ok, detail, s);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

BaseFunction sep_exp(int arity) {
  std::vector<BaseFunction> fs;
  for (int i = 0; i <= arity; ++i) fs.push_back(BaseFunction::exponential(Rational(i + 1, 3)));
  return BaseFunction::separable(fs);
}

}  // namespace

int main() {
  run(1, "structural relation suite", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = verify_theorem_relations(6);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // sigma_i delta_i = partial_i, checked separately on top of the suite
    bool partial_ok = true;
    for (int n = 0; n <= 6; ++n)
      for (int i = 0; i <= n; ++i) {
        auto f = SpectralExpr::generic(n);
        partial_ok = partial_ok && partial(i, f) == degeneracy(i, face(i, f));
      }
    d = std::to_string(rep.instances.size() - rep.failures()) + "/" + std::to_string(rep.instances.size()) +
        " instances, n<=6" + (partial_ok ? "" : ", partial mismatch");
    return rep.all_hold() && partial_ok && s < 5.0;
  });

  run(2, "dual relation suite", [](std::string& d) {
    auto rep = verify_dual_relations(6);
    auto c = rep.counts();
    d = std::to_string(rep.instances.size() - rep.failures()) + "/" + std::to_string(rep.instances.size()) +
        " instances (d0t " + std::to_string(c["dual-d0t"]) + ", s0t " + std::to_string(c["dual-s0t"]) + ")";
    return rep.all_hold() && c["dual-d0t"] > 0 && c["dual-s0t"] > 0;
  });

  run(3, "numerical soundness", [](std::string& d) {
    auto a = numeric_soundness(verify_theorem_relations(6), 1, 1e-9);
    auto b = numeric_soundness(verify_dual_relations(6), 2, 1e-9);
    std::size_t exact = 0, exact_bad = 0;
    for (const auto* r : {&a, &b})
      for (const auto& c : r->cases)
        if (c.exact_checked) {
          ++exact;
          if (!c.exact_ok) ++exact_bad;
        }
    d = std::to_string(a.cases.size() + b.cases.size()) + " cases, worst " +
        fmt("%.2e", std::max(a.worst(), b.worst())) + ", exact " + std::to_string(exact - exact_bad) + "/" +
        std::to_string(exact);
    return a.all_pass() && b.all_pass() && exact > 0 && exact_bad == 0;
  });

  run(4, "matrix oracle lemmas", [](std::string& d) {
    double worst_deg = 0, worst_extra = 0, worst_cyc = 0;
    for (std::uint64_t seed : {1, 2, 3}) {
      auto ctx = MatrixContext::random(5, seed);
      std::mt19937_64 rng(seed + 1000);
      for (int n = 1; n <= 3; ++n) {
        auto f = SpectralExpr::generic(n);
        auto rho = random_matrices(5, n, rng);
        for (int j = 0; j < n; ++j) worst_deg = std::max(worst_deg, check_degeneracy_lemma(ctx, f, sep_exp(n), j, rho));
        auto rho1 = random_matrices(5, n + 1, rng);
        auto r = check_trace_cyclic(ctx, f, sep_exp(n), rho1);
        worst_extra = std::max(worst_extra, r.extra_degeneracy);
        worst_cyc = std::max(worst_cyc, r.cyclic);
      }
    }
    d = fmt("degeneracy %.1e, extra %.1e, cyclic %.1e", worst_deg, worst_extra, worst_cyc);
    return worst_deg <= 1e-10 && worst_extra <= 1e-10 && worst_cyc <= 1e-10;
  });

  run(5, "variation formula", [](std::string& d) {
    double worst = 0, worst_ratio = 1e300;
    for (std::uint64_t seed : {1, 2, 3}) {
      auto ctx = MatrixContext::random(5, seed);
      std::mt19937_64 rng(seed + 2000);
      for (int n = 1; n <= 3; ++n) {
        std::vector<Rational> w;
        for (int k = 0; k <= n; ++k) w.push_back(Rational(k + 2, 2 * (n + 2)));
        auto base = BaseFunction::ridge(BaseFunction::exponential(), w);
        auto f = SpectralExpr::generic(n);
        auto rho = random_matrices(5, n, rng);
        Matrix a = random_hermitian(5, rng);
        Matrix exact = variation(ctx, f, base, rho, a, VariationMode::Conformal);
        worst = std::max(worst, relative_difference(exact, variation_fd(ctx, f, base, rho, a, 1e-5)));
        // at 1e-5 the mismatch is rounding dominated, the order is read off at larger steps
        double e1 = relative_difference(exact, variation_fd(ctx, f, base, rho, a, 1e-3));
        double e2 = relative_difference(exact, variation_fd(ctx, f, base, rho, a, 5e-4));
        worst_ratio = std::min(worst_ratio, e1 / e2);
      }
    }
    d = fmt("rel err %.1e at 1e-5, min halving ratio %.2f", worst, worst_ratio);
    return worst <= 1e-6 && worst_ratio >= 3.0;
  });

  run(6, "Taylor expansion", [](std::string& d) {
    auto ctx = MatrixContext::random(5, 1);
    std::mt19937_64 rng(2);
    Matrix b = random_hermitian(5, rng);
    auto ts = log_grid(1e-1, 1e-3, 5);
    auto r1 = taylor_check(ctx, BaseFunction::exponential(), b, 1, ts);
    auto r2 = taylor_check(ctx, BaseFunction::exponential(), b, 2, ts);
    // x^2: the first-order remainder is t^2 b^2, the second-order one vanishes
    auto q1 = taylor_check(ctx, BaseFunction::monomial(2), b, 1, ts);
    auto q2 = taylor_check(ctx, BaseFunction::monomial(2), b, 2, ts);
    double bb = (b * b).norm(), dev = 0, rest = 0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      dev = std::max(dev, std::abs(q1.remainders[k] / (ts[k] * ts[k]) - bb) / bb);
      rest = std::max(rest, q2.remainders[k]);
    }
    d = fmt("slopes %.3f, %.3f", r1.slope, r2.slope) + fmt("; x^2 dev %.1e, N=2 rest %.1e", dev, rest);
    return std::abs(r1.slope - 2.0) <= 0.1 && std::abs(r2.slope - 3.0) <= 0.1 && dev <= 1e-8 && rest <= 1e-12;
  });

  run(7, "CM gradient", [](std::string& d) {
    SpectralExpr T = SpectralExpr::generic(1, "T");
    bool pipeline = derive_gradient(T).coefficients == cm_coefficients(T);
    const std::vector<std::pair<std::string, BaseFunction>> presets{
        {"exp", BaseFunction::separable({BaseFunction::exponential(), BaseFunction::exponential()})},
        {"x3x2", BaseFunction::separable({BaseFunction::monomial(3), BaseFunction::monomial(2)})},
        {"omega", BaseFunction::separable({BaseFunction::resolvent(), BaseFunction::resolvent()})}};
    double worst = 0;
    int checks = 0;
    for (const auto& [name, base] : presets)
      for (int dim : {4, 5, 6}) {
        auto ctx = MatrixContext::random(dim, 1);
        std::mt19937_64 rng(2);
        std::vector<Matrix> dirs;
        for (int k = 0; k < 10; ++k) dirs.push_back(random_hermitian(dim, rng));
        auto g = gradient_check(T, base, ctx, dirs, 1e-5);
        worst = std::max(worst, g.max_relative_error);
        checks += static_cast<int>(dirs.size());
      }
    d = std::to_string(checks) + " directions, worst " + fmt("%.1e", worst) +
        (pipeline ? ", pipeline = closed form" : ", pipeline mismatch");
    return pipeline && worst <= 1e-6;
  });

  run(8, "omega calculus", [](std::string& d) {
    namespace om = rearrange::omega;
    std::vector<std::string> bad;
    auto w = om::term({1});
    if (om::partial(0, w) != om::term({2}, -1)) bad.push_back("d0 w");
    if (om::partial(0, om::partial(0, w)) != om::term({3}, 2)) bad.push_back("d0^2 w");
    auto demo = om::second_derivative_decomposition_demo();
    if (!demo.symbolic_identity || !demo.equals_two_omega_cubed) bad.push_back("demo");
    auto four = om::ones(3);
    if (om::degeneracy(0, four) != om::term({2, 1, 1})) bad.push_back("s0");
    if (om::degeneracy(1, four) != om::term({1, 2, 1})) bad.push_back("s1");
    if (om::degeneracy(1, om::degeneracy(1, four)) != om::term({1, 3})) bad.push_back("s1 s1");
    auto e = w;
    for (int n = 1; n <= 8; ++n) {
      e = om::face(0, e);
      if (e != om::term(om::Index(n + 1, 1), n % 2 ? -1 : 1)) bad.push_back("ladder " + std::to_string(n));
    }
    std::size_t count = 0;
    for (const auto& alpha : om::indices_up_to(6)) {
      ++count;
      if (!om::differential_relation_check(alpha).holds) bad.push_back("alpha");
    }
    d = std::to_string(count) + " multi-indices" + (bad.empty() ? "" : ", failed: " + bad.front());
    return bad.empty();
  });

  run(9, "appendix combinatorics", [](std::string& d) {
    namespace sc = rearrange::simplicial;
    std::size_t maps = 0, bad = 0;
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m)
        for (const auto& f : sc::all_maps(n, m)) {
          ++maps;
          if (sc::realize(sc::normal_form(f)) != f || sc::count_decompositions(f) != 1) ++bad;
        }
    auto conf = sc::check_confluence(8, 4, 6, 2000, 1);
    auto dual = sc::verify_duality(4);
    d = std::to_string(maps) + " maps, " + std::to_string(conf.words) + " words (<=6 exhaustive, 7-8 sampled), " +
        std::to_string(dual.checks.size()) + " duality checks";
    return bad == 0 && conf.failures == 0 && dual.all_hold();
  });

  run(10, "coproduct and coassociativity", [](std::string& d) {
    std::vector<Rational> pts{Rational(2, 3), Rational(-5, 7)};
    bool ok = true;
    for (int k = 0; k <= 12; ++k) {
      auto t = coproduct_power(TensorBasis::Monomial, k);
      Rational sum = 0;
      for (const auto& [e, c] : t.terms()) {
        Rational v = c;
        for (int r = 0; r < e[0]; ++r) v *= pts[0];
        for (int r = 0; r < e[1]; ++r) v *= pts[1];
        sum += v;
      }
      ok = ok && sum == divided_difference(BaseFunction::monomial(k), pts);
      ok = ok && coproduct_at(t, 0) == coproduct_at(t, 1);
    }
    for (int p = 1; p <= 6; ++p) {
      auto c = coproduct_power(TensorBasis::Resolvent, p);
      ok = ok && coproduct_at(c, 0) == coproduct_at(c, 1);
      std::vector<Complex> yz{0.25, -1.5};
      Complex a = evaluate(c, yz), b = divided_difference(BaseFunction::resolvent(2, 1, p), yz);
      ok = ok && std::abs(a - b) <= 1e-13 * std::abs(b);
    }
    int pairs = 0;
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b, ++pairs)
        ok = ok && coproduct_power(TensorBasis::Monomial, a + b) ==
                       multiply_leg(coproduct_power(TensorBasis::Monomial, a), 1, b) +
                           multiply_leg(coproduct_power(TensorBasis::Monomial, b), 0, a);
    d = "monomials k<=12, omega^p p<=6, " + std::to_string(pairs) + " Leibniz pairs";
    return ok;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
