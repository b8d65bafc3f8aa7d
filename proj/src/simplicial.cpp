#include "rearrange/simplicial.hpp"

#include <algorithm>
#include <random>
#include <optional>
#include <stdexcept>

namespace rearrange::simplicial {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Visits all non-decreasing sequences of length len with entries in [lo, hi].
template <class F>
void for_each_monotone(int len, long lo, long hi, std::vector<long>& buf, F&& visit) {
  if (static_cast<int>(buf.size()) == len) {
    visit(buf);
    return;
  }
  long start = buf.empty() ? lo : buf.back();
  for (long v = start; v <= hi; ++v) {
    buf.push_back(v);
    for_each_monotone(len, lo, hi, buf, visit);
    buf.pop_back();
  }
}

// Strictly ordered subsets of [0, top] of size k, emitted ascending.
void subsets(int top, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int v = start; v <= top; ++v) {
    cur.push_back(v);
    subsets(top, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// ------------------------------------------------------------ simplicial maps

SimplicialMap SimplicialMap::identity(int n) {
  SimplicialMap f{n, n, {}};
  for (int k = 0; k <= n; ++k) f.values.push_back(k);
  return f;
}

SimplicialMap SimplicialMap::face(int i, int n) {
  require(n >= 1 && i >= 0 && i <= n, "face delta_" + std::to_string(i) + " into [" + std::to_string(n) + "]");
  SimplicialMap f{n - 1, n, {}};
  for (int k = 0; k <= n - 1; ++k) f.values.push_back(k < i ? k : k + 1);
  return f;
}

SimplicialMap SimplicialMap::degeneracy(int j, int n) {
  require(n >= 0 && j >= 0 && j <= n, "degeneracy sigma_" + std::to_string(j) + " onto [" + std::to_string(n) + "]");
  SimplicialMap f{n + 1, n, {}};
  for (int k = 0; k <= n + 1; ++k) f.values.push_back(k <= j ? k : k - 1);
  return f;
}

bool SimplicialMap::is_valid() const {
  if (static_cast<int>(values.size()) != source + 1) return false;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0 || values[k] > target) return false;
    if (k && values[k] < values[k - 1]) return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  require(f.target == g.source, "compose: target/source mismatch");
  SimplicialMap h{f.source, g.target, {}};
  for (int v : f.values) h.values.push_back(g.values[static_cast<std::size_t>(v)]);
  return h;
}

std::vector<SimplicialMap> all_maps(int n, int m) {
  std::vector<SimplicialMap> out;
  std::vector<long> buf;
  for_each_monotone(n + 1, 0, m, buf, [&](const std::vector<long>& v) {
    out.push_back({n, m, std::vector<int>(v.begin(), v.end())});
  });
  return out;
}

int NormalForm::target() const {
  return source - static_cast<int>(degeneracies.size()) + static_cast<int>(faces.size());
}

NormalForm normal_form(const SimplicialMap& f) {
  require(f.is_valid(), "normal_form: not a non-decreasing map");
  NormalForm nf;
  nf.source = f.source;
  std::vector<bool> hit(static_cast<std::size_t>(f.target) + 1, false);
  for (int v : f.values) hit[static_cast<std::size_t>(v)] = true;
  for (int l = f.target; l >= 0; --l)
    if (!hit[static_cast<std::size_t>(l)]) nf.faces.push_back(l);
  for (int j = 0; j + 1 <= f.source; ++j)
    if (f.values[static_cast<std::size_t>(j)] == f.values[static_cast<std::size_t>(j) + 1])
      nf.degeneracies.push_back(j);
  return nf;
}

SimplicialMap realize(const NormalForm& nf) {
  SimplicialMap cur = SimplicialMap::identity(nf.source);
  int a = nf.source;
  for (auto it = nf.degeneracies.rbegin(); it != nf.degeneracies.rend(); ++it) {
    require(a >= 1 && *it <= a - 1, "realize: sigma_" + std::to_string(*it) + " undefined on [" + std::to_string(a) + "]");
    cur = compose(SimplicialMap::degeneracy(*it, a - 1), cur);
    --a;
  }
  for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it) {
    require(*it >= 0 && *it <= a + 1, "realize: delta_" + std::to_string(*it) + " undefined on [" + std::to_string(a) + "]");
    cur = compose(SimplicialMap::face(*it, a + 1), cur);
    ++a;
  }
  return cur;
}

std::string to_string(const NormalForm& nf) {
  std::string s;
  for (int i : nf.faces) s += (s.empty() ? "" : " ") + std::string("d") + std::to_string(i);
  for (int j : nf.degeneracies) s += (s.empty() ? "" : " ") + std::string("s") + std::to_string(j);
  return s.empty() ? "id" : s;
}

int count_decompositions(const SimplicialMap& f) {
  int count = 0;
  const int n = f.source, m = f.target;
  for (int s = 0; s <= n; ++s) {
    int r = m - n + s;
    if (r < 0 || r > m + 1) continue;
    std::vector<std::vector<int>> faces, degs;
    std::vector<int> cur;
    subsets(m, r, cur, faces);
    subsets(n - 1, s, cur, degs);
    for (auto fs : faces) {
      std::reverse(fs.begin(), fs.end());
      for (const auto& ds : degs) {
        try {
          if (realize(NormalForm{n, fs, ds}) == f) ++count;
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }
  return count;
}

// ------------------------------------------------------------ cyclic words

int CyclicWord::target() const {
  int a = source;
  require(a >= 0, "negative source");
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (it->kind) {
      case LetterKind::Face:
        require(it->index >= 0 && it->index <= a + 1, "ill-typed face in cyclic word");
        ++a;
        break;
      case LetterKind::Degeneracy:
        require(a >= 1 && it->index >= 0 && it->index <= a - 1, "ill-typed degeneracy in cyclic word");
        --a;
        break;
      case LetterKind::Cyclic:
        break;
    }
  }
  return a;
}

std::string CyclicWord::to_string() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += " ";
    if (l.kind == LetterKind::Face) s += "d" + std::to_string(l.index);
    if (l.kind == LetterKind::Degeneracy) s += "s" + std::to_string(l.index);
    if (l.kind == LetterKind::Cyclic) s += "t";
  }
  return s.empty() ? "id" : s;
}

CyclicNormalForm cyclic_normal_form(const CyclicWord& w, RewriteOrder order, std::uint64_t seed) {
  w.target();
  std::mt19937_64 rng(seed);
  std::vector<Letter> L = w.letters;
  const Letter tau{LetterKind::Cyclic, 0};
  int steps = 0;
  while (true) {
    // source arity of every letter
    std::vector<int> src(L.size());
    int a = w.source;
    for (std::size_t p = L.size(); p-- > 0;) {
      src[p] = a;
      if (L[p].kind == LetterKind::Face) ++a;
      if (L[p].kind == LetterKind::Degeneracy) --a;
    }
    // candidate redexes: (position, kind) with kind 0 = push, 1 = cancel a full tau-run
    std::vector<std::pair<std::size_t, int>> redex;
    for (std::size_t p = 0; p + 1 < L.size(); ++p)
      if (L[p].kind == LetterKind::Cyclic && L[p + 1].kind != LetterKind::Cyclic) redex.push_back({p, 0});
    for (std::size_t p = 0; p < L.size();) {
      if (L[p].kind != LetterKind::Cyclic) {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q < L.size() && L[q].kind == LetterKind::Cyclic) ++q;
      if (static_cast<int>(q - p) >= src[p] + 1) redex.push_back({p, 1});
      p = q;
    }
    if (redex.empty()) break;
    if (++steps > 100000) throw std::runtime_error("cyclic_normal_form: rewriting did not terminate");
    std::sort(redex.begin(), redex.end());
    std::pair<std::size_t, int> pick;
    if (order == RewriteOrder::LeftmostFirst) pick = redex.front();
    else if (order == RewriteOrder::RightmostFirst) pick = redex.back();
    else pick = redex[std::uniform_int_distribution<std::size_t>(0, redex.size() - 1)(rng)];
    const std::size_t p = pick.first;
    if (pick.second == 1) {
      L.erase(L.begin() + static_cast<long>(p), L.begin() + static_cast<long>(p) + src[p] + 1);
      continue;
    }
    const Letter g = L[p + 1];
    const int b = src[p + 1];  // source of g
    std::vector<Letter> rep;
    if (g.kind == LetterKind::Face) {
      if (g.index >= 1) rep = {{LetterKind::Face, g.index - 1}, tau};
      else rep = {{LetterKind::Face, b + 1}};
    } else {
      if (g.index >= 1) rep = {{LetterKind::Degeneracy, g.index - 1}, tau};
      else rep = {{LetterKind::Degeneracy, b - 1}, tau, tau};
    }
    L.erase(L.begin() + static_cast<long>(p), L.begin() + static_cast<long>(p) + 2);
    L.insert(L.begin() + static_cast<long>(p), rep.begin(), rep.end());
  }
  CyclicNormalForm out{{SimplicialMap::identity(w.source), 0}, {}, {w.source, L}, steps};
  int power = 0;
  std::vector<Letter> delta;
  for (const auto& l : L) {
    if (l.kind == LetterKind::Cyclic) ++power;
    else delta.push_back(l);
  }
  SimplicialMap m = SimplicialMap::identity(w.source);
  int a = w.source;
  for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
    if (it->kind == LetterKind::Face) {
      m = compose(SimplicialMap::face(it->index, a + 1), m);
      ++a;
    } else {
      m = compose(SimplicialMap::degeneracy(it->index, a - 1), m);
      --a;
    }
  }
  out.morphism = {m, power % (w.source + 1)};
  out.simplicial_nf = normal_form(m);
  return out;
}

// ------------------------------------------------------------ Z-model

namespace {

CyclicMap normalized(int source, int target, std::vector<long> v) {
  long shift = floor_div(v[0], target + 1) * (target + 1);
  for (auto& x : v) x -= shift;
  return {source, target, std::move(v)};
}

}  // namespace

long CyclicMap::operator()(long k) const {
  long q = floor_div(k, source + 1);
  long r = k - q * (source + 1);
  return values[static_cast<std::size_t>(r)] + q * (target + 1);
}

bool CyclicMap::is_valid() const {
  if (static_cast<int>(values.size()) != source + 1) return false;
  if (values[0] < 0 || values[0] > target) return false;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[k - 1]) return false;
  return values.back() <= values[0] + target + 1;
}

CyclicMap CyclicMap::identity(int n) { return embed(SimplicialMap::identity(n)); }
CyclicMap CyclicMap::face(int i, int n) { return embed(SimplicialMap::face(i, n)); }
CyclicMap CyclicMap::degeneracy(int j, int n) { return embed(SimplicialMap::degeneracy(j, n)); }

CyclicMap CyclicMap::tau(int n) {
  std::vector<long> v;
  for (int k = 0; k <= n; ++k) v.push_back(k - 1);
  return normalized(n, n, std::move(v));
}

CyclicMap CyclicMap::tau_inverse(int n) {
  std::vector<long> v;
  for (int k = 0; k <= n; ++k) v.push_back(k + 1);
  return normalized(n, n, std::move(v));
}

CyclicMap CyclicMap::extra_degeneracy(int n) {
  return compose(degeneracy(0, n), tau_inverse(n + 1));
}

CyclicMap compose(const CyclicMap& g, const CyclicMap& f) {
  require(f.target == g.source, "compose: target/source mismatch");
  std::vector<long> v;
  for (long x : f.values) v.push_back(g(x));
  return normalized(f.source, g.target, std::move(v));
}

CyclicMap embed(const SimplicialMap& f) {
  return {f.source, f.target, std::vector<long>(f.values.begin(), f.values.end())};
}

CyclicMap realize(const CyclicWord& w) {
  CyclicMap cur = CyclicMap::identity(w.source);
  int a = w.source;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (it->kind) {
      case LetterKind::Face:
        cur = compose(CyclicMap::face(it->index, a + 1), cur);
        ++a;
        break;
      case LetterKind::Degeneracy:
        cur = compose(CyclicMap::degeneracy(it->index, a - 1), cur);
        --a;
        break;
      case LetterKind::Cyclic:
        cur = compose(CyclicMap::tau(a), cur);
        break;
    }
  }
  return cur;
}

CyclicMap realize(const CyclicMorphism& m) {
  CyclicMap t = CyclicMap::identity(m.simplicial.source);
  for (int k = 0; k < m.power; ++k) t = compose(CyclicMap::tau(m.simplicial.source), t);
  return compose(embed(m.simplicial), t);
}

std::vector<CyclicMap> all_cyclic_maps(int n, int m) {
  std::vector<CyclicMap> out;
  for (long v0 = 0; v0 <= m; ++v0) {
    std::vector<long> buf{v0};
    for_each_monotone(n + 1, v0, v0 + m + 1, buf,
                      [&](const std::vector<long>& v) { out.push_back({n, m, v}); });
  }
  return out;
}

namespace {

// Letters available on [a] that keep the target within max_arity.
std::vector<Letter> letters_on(int a, int max_arity) {
  std::vector<Letter> out;
  if (a + 1 <= max_arity)
    for (int i = 0; i <= a + 1; ++i) out.push_back({LetterKind::Face, i});
  for (int j = 0; j + 1 <= a; ++j) out.push_back({LetterKind::Degeneracy, j});
  out.push_back({LetterKind::Cyclic, 0});
  return out;
}

int after(const Letter& l, int a) {
  if (l.kind == LetterKind::Face) return a + 1;
  if (l.kind == LetterKind::Degeneracy) return a - 1;
  return a;
}

void grow(int a, int left, int max_arity, std::vector<Letter>& rev, int source, std::vector<CyclicWord>& out) {
  if (left == 0) {
    out.push_back({source, {rev.rbegin(), rev.rend()}});
    return;
  }
  for (const auto& l : letters_on(a, max_arity)) {
    rev.push_back(l);
    grow(after(l, a), left - 1, max_arity, rev, source, out);
    rev.pop_back();
  }
}

}  // namespace

std::vector<CyclicWord> enumerate_words(int source, int length, int max_arity) {
  std::vector<CyclicWord> out;
  std::vector<Letter> rev;
  grow(source, length, max_arity, rev, source, out);
  return out;
}

CyclicWord random_word(int source, int length, int max_arity, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Letter> rev;
  int a = source;
  for (int k = 0; k < length; ++k) {
    auto ls = letters_on(a, max_arity);
    const Letter l = ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)];
    rev.push_back(l);
    a = after(l, a);
  }
  return {source, {rev.rbegin(), rev.rend()}};
}

ConfluenceReport check_confluence(int max_length, int max_arity, int exhaustive_length, int samples_per_length,
                                  std::uint64_t seed) {
  ConfluenceReport rep;
  auto check = [&](const CyclicWord& w, std::uint64_t s) {
    ++rep.words;
    const auto ref = cyclic_normal_form(w, RewriteOrder::LeftmostFirst);
    bool ok = realize(ref.morphism) == realize(w) && realize(ref.rewritten) == realize(w);
    ok = ok && cyclic_normal_form(w, RewriteOrder::RightmostFirst).rewritten.letters == ref.rewritten.letters;
    for (std::uint64_t r = 0; r < 3 && ok; ++r)
      ok = cyclic_normal_form(w, RewriteOrder::Random, s + r).rewritten.letters == ref.rewritten.letters;
    if (!ok) {
      ++rep.failures;
      if (rep.counterexamples.size() < 5) rep.counterexamples.push_back(w.to_string());
    }
  };
  std::uint64_t s = seed;
  for (int len = 0; len <= max_length; ++len)
    for (int src = 0; src <= max_arity; ++src) {
      if (len <= exhaustive_length) {
        for (const auto& w : enumerate_words(src, len, max_arity)) check(w, s++);
      } else {
        for (int k = 0; k < samples_per_length; ++k, ++s) check(random_word(src, len, max_arity, s), s);
      }
    }
  return rep;
}

// ------------------------------------------------------------ opposite category

std::string OpWord::to_string() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += " ";
    if (l.kind == OpKind::D) s += "d" + std::to_string(l.index);
    if (l.kind == OpKind::S) s += "s" + std::to_string(l.index);
    if (l.kind == OpKind::T) s += "t";
  }
  return s.empty() ? "id" : s;
}

namespace {

// Source arity of each letter of an op word, checking index ranges.
std::vector<int> op_sources(const OpWord& w) {
  std::vector<int> src(w.letters.size());
  int a = w.source;
  for (std::size_t p = w.letters.size(); p-- > 0;) {
    const auto& l = w.letters[p];
    src[p] = a;
    if (l.kind == OpKind::D) {
      require(a >= 1 && l.index >= 0 && l.index <= a, "ill-typed d in op word");
      --a;
    } else if (l.kind == OpKind::S) {
      require(l.index >= 0 && l.index <= a, "ill-typed s in op word");
      ++a;
    }
  }
  return src;
}

// Letter read with arrows reversed.
CyclicMap opposite_letter(const OpLetter& l, int a) {
  switch (l.kind) {
    case OpKind::D: return CyclicMap::face(l.index, a);
    case OpKind::S: return CyclicMap::degeneracy(l.index, a);
    case OpKind::T: return CyclicMap::tau(a);
  }
  throw std::invalid_argument("bad op letter");
}

}  // namespace

CyclicMap opposite_realize(const OpWord& w) {
  auto src = op_sources(w);
  std::optional<CyclicMap> cur;
  // op composition L_0 o ... o L_{k-1} reverses to L_{k-1}* o ... o L_0*
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    auto m = opposite_letter(w.letters[p], src[p]);
    cur = cur ? compose(m, *cur) : m;
  }
  if (!cur) return CyclicMap::identity(w.source);
  return *cur;
}

CyclicMap duality(const OpLetter& g, int a) {
  switch (g.kind) {
    case OpKind::D:
      require(a >= 1 && g.index >= 0 && g.index <= a, "duality: bad d index");
      return g.index < a ? CyclicMap::degeneracy(g.index, a - 1) : CyclicMap::extra_degeneracy(a - 1);
    case OpKind::S:
      require(g.index >= 0 && g.index <= a, "duality: bad s index");
      return CyclicMap::face(g.index + 1, a + 1);
    case OpKind::T:
      return CyclicMap::tau_inverse(a);
  }
  throw std::invalid_argument("bad op letter");
}

CyclicMap duality(const OpWord& w) {
  auto src = op_sources(w);
  CyclicMap cur = CyclicMap::identity(w.source);
  for (std::size_t p = w.letters.size(); p-- > 0;) cur = compose(duality(w.letters[p], src[p]), cur);
  return cur;
}

bool PresentationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

std::size_t PresentationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.holds; }));
}

namespace {

using CM = CyclicMap;

CyclicMap tau_power(int n, int k) {
  CyclicMap t = CM::identity(n);
  for (int r = 0; r < k; ++r) t = compose(CM::tau(n), t);
  return t;
}

OpLetter D(int i) { return {OpKind::D, i}; }
OpLetter S(int i) { return {OpKind::S, i}; }
OpLetter T() { return {OpKind::T, 0}; }

// Relations of the opposite category, each as a pair of op words on [n].
struct OpRelation {
  std::string name;
  int n, i, j;
  OpWord lhs, rhs;
};

std::vector<OpRelation> op_relations(int n_max) {
  std::vector<OpRelation> rel;
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 1; j <= n && n >= 2; ++j)
      for (int i = 0; i < j; ++i)
        rel.push_back({"op-dd", n, i, j, {n, {D(i), D(j)}}, {n, {D(j - 1), D(i)}}});
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        rel.push_back({"op-ss", n, i, j, {n, {S(i), S(j)}}, {n, {S(j + 1), S(i)}}});
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        OpWord lhs{n, {D(i), S(j)}};
        if (i < j) rel.push_back({"op-ds", n, i, j, lhs, {n, {S(j - 1), D(i)}}});
        else if (i == j || i == j + 1) rel.push_back({"op-ds", n, i, j, lhs, {n, {}}});
        else rel.push_back({"op-ds", n, i, j, lhs, {n, {S(j), D(i - 1)}}});
      }
    for (int i = 1; i <= n; ++i) {
      rel.push_back({"op-dt", n, i, 0, {n, {D(i), T()}}, {n, {T(), D(i - 1)}}});
      rel.push_back({"op-st", n, i, 0, {n, {S(i), T()}}, {n, {T(), S(i - 1)}}});
    }
    if (n >= 1) rel.push_back({"op-d0t", n, 0, 0, {n, {D(0), T()}}, {n, {D(n)}}});
    rel.push_back({"op-s0t", n, 0, 0, {n, {S(0), T()}}, {n, {T(), T(), S(n)}}});
    rel.push_back({"op-t-order", n, 0, 0, {n, std::vector<OpLetter>(static_cast<std::size_t>(n) + 1, T())},
                   {n, {}}});
  }
  return rel;
}

}  // namespace

PresentationReport verify_deltaC_presentation(int n_max) {
  PresentationReport rep;
  auto add = [&](std::string name, int n, int i, int j, const CyclicMap& a, const CyclicMap& b) {
    rep.checks.push_back({std::move(name), n, i, j, a == b});
  };
  for (int n = 0; n <= n_max; ++n) {
    // delta_j delta_i = delta_i delta_{j-1} on [n-1] -> [n+1]
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
          add("dd", n, i, j, compose(CM::face(j, n + 1), CM::face(i, n)),
              compose(CM::face(i, n + 1), CM::face(j - 1, n)));
    // sigma_j sigma_i = sigma_i sigma_{j+1} on [n+1] -> [n-1]
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n - 1; ++j)
        add("ss", n, i, j, compose(CM::degeneracy(j, n - 1), CM::degeneracy(i, n)),
            compose(CM::degeneracy(i, n - 1), CM::degeneracy(j + 1, n)));
    // sigma_j delta_i on [n] -> [n]
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n; ++j) {
        auto lhs = compose(CM::degeneracy(j, n), CM::face(i, n + 1));
        if (i < j) add("sd", n, i, j, lhs, compose(CM::face(i, n), CM::degeneracy(j - 1, n - 1)));
        else if (i == j || i == j + 1) add("sd", n, i, j, lhs, CM::identity(n));
        else add("sd", n, i, j, lhs, compose(CM::face(i - 1, n), CM::degeneracy(j, n - 1)));
      }
    add("t-order", n, 0, 0, tau_power(n, n + 1), CM::identity(n));
    for (int i = 1; i <= n; ++i) {
      add("td", n, i, 0, compose(CM::tau(n), CM::face(i, n)), compose(CM::face(i - 1, n), CM::tau(n - 1)));
      add("ts", n, i, 0, compose(CM::tau(n), CM::degeneracy(i, n)),
          compose(CM::degeneracy(i - 1, n), CM::tau(n + 1)));
    }
    if (n >= 1) add("td0", n, 0, 0, CM::face(n, n), compose(CM::tau(n), CM::face(0, n)));
    add("ts0", n, 0, 0, compose(CM::tau(n), CM::degeneracy(0, n)),
        compose(CM::degeneracy(n, n), tau_power(n + 1, 2)));
    // extra degeneracy continues tau sigma_i = sigma_{i-1} tau to i = n+1
    add("ts-extra", n, n + 1, 0, compose(CM::tau(n), CM::extra_degeneracy(n)),
        compose(CM::degeneracy(n, n), CM::tau(n + 1)));
  }
  for (const auto& r : op_relations(n_max))
    add(r.name, r.n, r.i, r.j, opposite_realize(r.lhs), opposite_realize(r.rhs));
  return rep;
}

PresentationReport verify_duality(int n_max) {
  PresentationReport rep;
  for (const auto& r : op_relations(n_max))
    rep.checks.push_back({"dual-" + r.name, r.n, r.i, r.j, duality(r.lhs) == duality(r.rhs)});
  return rep;
}

}  // namespace rearrange::simplicial
