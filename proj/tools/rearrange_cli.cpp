// rearrange: command-line front end for the operator engine and its checks.

#include "rearrange/errors.hpp"
#include "rearrange/matrixcalc.hpp"
#include "rearrange/omega.hpp"
#include "rearrange/ops.hpp"
#include "rearrange/simplicial.hpp"
#include "rearrange/soundness.hpp"
#include "rearrange/variational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace rearrange;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kArity = 3;

struct Output {
  bool as_json = false;
  std::string out_path;

  void emit(const json& j, const std::string& text) const {
    std::string body = as_json ? j.dump(2) + "\n" : text;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << (as_json ? body : j.dump(2) + "\n");
    }
    std::cout << body;
  }
};

json header(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

// "generic:N" -> the generic symbol on C(N)
SpectralExpr parse_function_spec(const std::string& spec) {
  const std::string prefix = "generic:";
  if (spec.rfind(prefix, 0) != 0) throw ParseError("function spec must look like generic:N", 0);
  const std::string rest = spec.substr(prefix.size());
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a non-negative integer after 'generic:'", prefix.size());
  if (rest.size() > 3) throw ParseError("arity too large", prefix.size());
  return SpectralExpr::generic(std::stoi(rest));
}

std::vector<int> parse_index(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(pos, end - pos);
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        tok.size() > 3 || std::stoi(tok) < 1)
      throw ParseError("index entries must be positive integers", pos);
    out.push_back(std::stoi(tok));
    pos = end + 1;
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// ------------------------------------------------------------ apply

int run_apply(const std::string& word_text, const std::string& spec, const Output& out) {
  OperatorWord w = OperatorWord::parse(word_text);
  SpectralExpr f = parse_function_spec(spec);
  SpectralExpr r = apply_word(w, f);
  json j = header("apply");
  j["word"] = w.to_string();
  j["input"] = spec;
  j["result"] = to_json(r);
  j["text"] = to_string(r);
  out.emit(j, to_string(r) + "\n");
  return kPass;
}

// ------------------------------------------------------------ verify / dual-verify

struct VerifyOptions {
  std::string mode = "structural";
  int n_max = -1;
  int d = 5;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

int run_verify(bool dual, const VerifyOptions& o, const Output& out) {
  const std::string command = dual ? "dual-verify" : "verify";
  const int n_max = o.n_max >= 0 ? o.n_max : (o.mode == "matrix" ? 3 : 6);
  RelationReport rel = dual ? verify_dual_relations(n_max) : verify_theorem_relations(n_max);
  auto instances = rel.instances;
  std::sort(instances.begin(), instances.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });

  json j = header(command);
  j["mode"] = o.mode;
  j["n_max"] = n_max;
  j["seed"] = o.seed;
  std::ostringstream text;
  bool pass = rel.all_hold();

  if (o.mode == "structural") {
    json arr = json::array();
    for (const auto& r : instances)
      arr.push_back({{"key", r.key()}, {"relation", r.relation}, {"n", r.n}, {"i", r.i}, {"j", r.j},
                     {"lhs_ops", r.lhs_ops.to_string()}, {"rhs_ops", r.rhs_ops.to_string()},
                     {"lhs", to_string(r.lhs)}, {"holds", r.holds}});
    j["instances"] = arr;
    text << "relation                 instances  failures\n";
    std::map<std::string, std::size_t> failed;
    for (const auto& r : instances)
      if (!r.holds) ++failed[r.relation];
    for (const auto& [name, count] : rel.counts()) {
      char line[96];
      std::snprintf(line, sizeof line, "%-24s %9zu %9zu\n", name.c_str(), count, failed[name]);
      text << line;
    }
    text << (pass ? "PASS" : "FAIL") << ": " << instances.size() - rel.failures() << "/" << instances.size()
         << " instances hold exactly (n <= " << n_max << ")\n";
  } else if (o.mode == "numeric" || o.mode == "matrix") {
    SoundnessReport s = o.mode == "numeric" ? numeric_soundness(rel, o.seed, o.tol)
                                            : matrix_soundness(rel, o.d, n_max, o.seed, o.tol);
    pass = pass && s.all_pass();
    j["tolerance"] = o.tol;
    if (o.mode == "matrix") j["d"] = o.d;
    json arr = json::array();
    auto cases = s.cases;
    std::stable_sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) {
      return std::tie(a.key, a.basis) < std::tie(b.key, b.basis);
    });
    for (const auto& c : cases) {
      json e{{"key", c.key}, {"basis", c.basis}, {"relative_error", c.relative_error}, {"pass", c.pass}};
      if (c.exact_checked) e["exact"] = c.exact_ok;
      arr.push_back(e);
      if (!c.pass) text << "FAIL " << c.key << " [" << c.basis << "] rel err " << fmt(c.relative_error) << "\n";
    }
    j["instances"] = arr;
    j["worst_relative_error"] = s.worst();
    text << (pass ? "PASS" : "FAIL") << ": " << cases.size() - s.failures() << "/" << cases.size()
         << " evaluations agree, worst rel err " << fmt(s.worst()) << " (tol " << fmt(o.tol) << ", seed " << o.seed
         << ")\n";
  } else {
    throw ParseError("unknown mode '" + o.mode + "'", 0);
  }
  j["pass"] = pass;
  out.emit(j, text.str());
  return pass ? kPass : kFail;
}

// ------------------------------------------------------------ grad-check

struct GradOptions {
  int d = 5;
  std::uint64_t seed = 1;
  std::string preset = "exp";
  double step = 1e-5;
  double tol = 1e-6;
  int directions = 10;
};

BaseFunction preset_base(const std::string& name) {
  if (name == "exp") return BaseFunction::separable({BaseFunction::exponential(), BaseFunction::exponential()});
  if (name == "x3x2") return BaseFunction::separable({BaseFunction::monomial(3), BaseFunction::monomial(2)});
  if (name == "omega") return BaseFunction::separable({BaseFunction::resolvent(), BaseFunction::resolvent()});
  throw ParseError("unknown preset '" + name + "' (exp, x3x2, omega)", 0);
}

int run_grad(const GradOptions& o, const Output& out) {
  BaseFunction base = preset_base(o.preset);
  SpectralExpr T = SpectralExpr::generic(1, "T");
  auto coeffs = cm_coefficients(T);
  bool pipeline = derive_gradient(T).coefficients == coeffs;
  MatrixContext ctx = MatrixContext::random(o.d, o.seed);
  std::mt19937_64 rng(o.seed + 1);
  std::vector<Matrix> dirs;
  for (int k = 0; k < o.directions; ++k) dirs.push_back(random_hermitian(o.d, rng));
  auto g = gradient_check(T, base, ctx, dirs, o.step);
  bool pass = pipeline && g.max_relative_error <= o.tol;

  json j = header("grad-check");
  j["preset"] = o.preset;
  j["d"] = o.d;
  j["seed"] = o.seed;
  j["step"] = o.step;
  j["tolerance"] = o.tol;
  j["K"] = to_string(coeffs.K);
  j["H"] = to_string(coeffs.H);
  j["pipeline_matches"] = pipeline;
  j["relative_errors"] = g.relative_errors;
  j["max_relative_error"] = g.max_relative_error;
  j["pass"] = pass;
  std::ostringstream text;
  text << "K = " << to_string(coeffs.K) << "\nH = " << to_string(coeffs.H) << "\n";
  text << "re-derivation " << (pipeline ? "matches" : "DIFFERS") << "\n";
  text << (pass ? "PASS" : "FAIL") << ": " << o.directions << " directions, max rel err "
       << fmt(g.max_relative_error) << " (tol " << fmt(o.tol) << ", d " << o.d << ", seed " << o.seed << ")\n";
  out.emit(j, text.str());
  return pass ? kPass : kFail;
}

// ------------------------------------------------------------ omega

int run_omega(const std::string& alpha_text, const std::string& word_text, bool check, bool demo, std::uint64_t seed,
              double tol, const Output& out) {
  json j = header("omega");
  std::ostringstream text;
  bool pass = true;
  if (demo) {
    auto d = omega::second_derivative_decomposition_demo();
    j["demo"] = {{"word", d.word.to_string()},
                 {"rewritten", d.rewritten.to_string()},
                 {"symbolic_identity", d.symbolic_identity},
                 {"direct", to_string(d.direct)},
                 {"first", to_string(d.first)},
                 {"second", to_string(d.second)},
                 {"equals_two_omega_cubed", d.equals_two_omega_cubed}};
    text << d.word.to_string() << " = " << d.rewritten.to_string() << "\n";
    text << "  direct: " << to_string(d.direct) << "\n  terms:  " << to_string(d.first) << " + "
         << to_string(d.second) << "\n";
    pass = d.symbolic_identity && d.equals_two_omega_cubed;
  }
  if (!alpha_text.empty()) {
    auto alpha = parse_index(alpha_text);
    OperatorWord w = OperatorWord::parse(word_text);
    TensorExpr r = omega::apply_word(w, omega::term(alpha));
    json terms = json::array();
    for (const auto& [idx, c] : r.terms()) terms.push_back({{"coeff", format_fraction(c)}, {"index", idx}});
    j["alpha"] = alpha;
    j["word"] = w.to_string();
    j["result"] = terms;
    j["text"] = to_string(r);
    text << to_string(r) << "\n";
    if (check) {
      double res = omega::omega_vs_generic(alpha, w, 8, seed);
      j["seed"] = seed;
      j["generic_residual"] = res;
      j["tolerance"] = tol;
      pass = pass && res <= tol;
      text << "bracket engine residual " << fmt(res) << "\n";
    }
  }
  j["pass"] = pass;
  out.emit(j, text.str());
  return pass ? kPass : kFail;
}

// ------------------------------------------------------------ simplicial

int run_simplicial(int n_max, int max_length, std::uint64_t seed, const Output& out) {
  using namespace simplicial;
  std::size_t maps = 0, bad_nf = 0, bad_count = 0;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n_max; ++m) {
      auto all = all_maps(n, m);
      for (const auto& f : all) {
        ++maps;
        if (realize(normal_form(f)) != f || count_decompositions(f) != 1) ++bad_nf;
      }
      long expected = n + 1;
      long b = 1;  // C(n+m+1, n+1)
      for (int k = 1; k <= n + 1; ++k) b = b * (m + k) / k;
      if (static_cast<long>(all_cyclic_maps(n, m).size()) != expected * b) ++bad_count;
    }
  auto pres = verify_deltaC_presentation(n_max);
  auto dual = verify_duality(n_max);
  auto conf = check_confluence(max_length, n_max, 4, 200, seed);
  bool pass = bad_nf == 0 && bad_count == 0 && pres.all_hold() && dual.all_hold() && conf.failures == 0;

  json j = header("simplicial");
  j["n_max"] = n_max;
  j["max_length"] = max_length;
  j["seed"] = seed;
  j["normal_form"] = {{"maps", maps}, {"failures", bad_nf}};
  j["cyclic_hom_counts"] = {{"failures", bad_count}};
  j["presentation"] = {{"checks", pres.checks.size()}, {"failures", pres.failures()}};
  j["duality"] = {{"checks", dual.checks.size()}, {"failures", dual.failures()}};
  j["confluence"] = {{"words", conf.words}, {"failures", conf.failures}, {"counterexamples", conf.counterexamples}};
  j["pass"] = pass;
  std::ostringstream text;
  text << "unique normal forms   " << maps - bad_nf << "/" << maps << " maps\n";
  text << "cyclic hom counts     " << (bad_count ? "MISMATCH" : "ok") << "\n";
  text << "presentation          " << pres.checks.size() - pres.failures() << "/" << pres.checks.size() << "\n";
  text << "duality               " << dual.checks.size() - dual.failures() << "/" << dual.checks.size() << "\n";
  text << "confluence            " << conf.words - conf.failures << "/" << conf.words << " words\n";
  text << (pass ? "PASS" : "FAIL") << "\n";
  out.emit(j, text.str());
  return pass ? kPass : kFail;
}

// ------------------------------------------------------------ taylor

int run_taylor(int d, std::uint64_t seed, const std::string& fn, int order, double tol, const Output& out) {
  BaseFunction f = fn == "exp" ? BaseFunction::exponential()
                   : fn == "x2" ? BaseFunction::monomial(2)
                                : throw ParseError("unknown function '" + fn + "' (exp, x2)", 0);
  if (order < 1) throw ArityError("order must be at least 1");
  MatrixContext ctx = MatrixContext::random(d, seed);
  std::mt19937_64 rng(seed + 7);
  Matrix b = random_hermitian(d, rng);
  auto ts = log_grid(1e-1, 1e-3, 5);
  auto rep = taylor_check(ctx, f, b, order, ts);
  bool pass = std::abs(rep.slope - (order + 1)) <= tol;
  if (fn == "x2" && order == 1) {
    double c = (b * b).norm();
    for (std::size_t k = 0; k < ts.size(); ++k)
      pass = pass && std::abs(rep.remainders[k] / (ts[k] * ts[k]) - c) <= 1e-9 * c;
  }
  json j = header("taylor");
  j["function"] = fn;
  j["order"] = order;
  j["d"] = d;
  j["seed"] = seed;
  j["t"] = rep.ts;
  j["remainder"] = rep.remainders;
  j["slope"] = rep.slope;
  j["pass"] = pass;
  std::ostringstream text;
  for (std::size_t k = 0; k < ts.size(); ++k) text << "t=" << fmt(ts[k]) << "  r=" << fmt(rep.remainders[k]) << "\n";
  text << (pass ? "PASS" : "FAIL") << ": slope " << rep.slope << " (expected " << order + 1 << ")\n";
  out.emit(j, text.str());
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rearrangement operators on spectral functions"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* sc) {
    sc->add_flag("--json", out.as_json, "JSON on stdout");
    sc->add_option("--out", out.out_path, "also write the JSON report to this file");
  };

  std::string word_text, spec;
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator word to a function");
  apply_cmd->add_option("word", word_text, "tokens in composition order, e.g. \"s0 d0\"")->required();
  apply_cmd->add_option("function", spec, "generic:N")->required();
  add_output(apply_cmd);

  VerifyOptions vo;
  auto add_verify = [&](CLI::App* sc) {
    sc->add_option("--mode", vo.mode, "structural | numeric | matrix")
        ->check(CLI::IsMember({"structural", "numeric", "matrix"}));
    sc->add_option("--n-max", vo.n_max, "largest n (default 6, matrix mode 3)");
    sc->add_option("-d", vo.d, "matrix dimension (matrix mode)");
    sc->add_option("--seed", vo.seed, "random seed");
    sc->add_option("--tol", vo.tol, "relative tolerance");
    add_output(sc);
  };
  auto* verify_cmd = app.add_subcommand("verify", "check the relation tables");
  add_verify(verify_cmd);
  auto* dual_cmd = app.add_subcommand("dual-verify", "check the d/s/t relation tables");
  add_verify(dual_cmd);

  GradOptions go;
  auto* grad_cmd = app.add_subcommand("grad-check", "gradient formula against finite differences");
  grad_cmd->add_option("-d", go.d, "matrix dimension");
  grad_cmd->add_option("--seed", go.seed, "random seed");
  grad_cmd->add_option("--preset", go.preset, "T: exp | x3x2 | omega");
  grad_cmd->add_option("--step", go.step, "finite-difference step");
  grad_cmd->add_option("--tol", go.tol, "relative tolerance");
  grad_cmd->add_option("--directions", go.directions, "number of random directions");
  add_output(grad_cmd);

  std::string alpha, omega_word;
  bool omega_check = false, omega_demo = false;
  std::uint64_t omega_seed = 1;
  double omega_tol = 1e-10;
  auto* omega_cmd = app.add_subcommand("omega", "act on resolvent multi-indices");
  omega_cmd->add_option("--alpha", alpha, "multi-index, e.g. 1,1,1");
  omega_cmd->add_option("--word", omega_word, "operator word");
  omega_cmd->add_flag("--check", omega_check, "compare with the bracket engine");
  omega_cmd->add_flag("--demo", omega_demo, "second-derivative rewriting example");
  omega_cmd->add_option("--seed", omega_seed, "random seed for --check");
  omega_cmd->add_option("--tol", omega_tol, "tolerance for --check");
  add_output(omega_cmd);

  int simp_n = 4, simp_len = 8;
  std::uint64_t simp_seed = 1;
  auto* simp_cmd = app.add_subcommand("simplicial", "normal forms, presentation and duality checks");
  simp_cmd->add_option("--n-max", simp_n, "largest object");
  simp_cmd->add_option("--max-length", simp_len, "longest word for the confluence check");
  simp_cmd->add_option("--seed", simp_seed, "random seed for sampled words");
  add_output(simp_cmd);

  int tay_d = 5, tay_order = 1;
  std::uint64_t tay_seed = 1;
  std::string tay_fn = "exp";
  double tay_tol = 0.1;
  auto* tay_cmd = app.add_subcommand("taylor", "remainder slopes of the Taylor expansion");
  tay_cmd->add_option("-d", tay_d, "matrix dimension");
  tay_cmd->add_option("--seed", tay_seed, "random seed");
  tay_cmd->add_option("--function", tay_fn, "exp | x2");
  tay_cmd->add_option("--order", tay_order, "expansion order N");
  tay_cmd->add_option("--tol", tay_tol, "allowed slope deviation");
  add_output(tay_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*apply_cmd) return run_apply(word_text, spec, out);
    if (*verify_cmd) return run_verify(false, vo, out);
    if (*dual_cmd) return run_verify(true, vo, out);
    if (*grad_cmd) return run_grad(go, out);
    if (*omega_cmd) return run_omega(alpha, omega_word, omega_check, omega_demo, omega_seed, omega_tol, out);
    if (*simp_cmd) return run_simplicial(simp_n, simp_len, simp_seed, out);
    if (*tay_cmd) return run_taylor(tay_d, tay_seed, tay_fn, tay_order, tay_tol, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kParse;
  } catch (const ArityError& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return kArity;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kArity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kFail;
}
