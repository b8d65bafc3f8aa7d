#include "rearrange/ops.hpp"

#include "rearrange/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>

namespace rearrange {

// ---------------------------------------------------------------- generators

void Generator::validate(int source) const {
  auto fail = [&](const std::string& why) {
    throw ArityError(token() + " on C(" + std::to_string(source) + "): " + why);
  };
  if (source < 0) fail("negative arity");
  switch (kind) {
    case GeneratorKind::Face:
    case GeneratorKind::Partial:
    case GeneratorKind::DualDegeneracy:
      if (index < 0 || index > source) fail("index out of range 0.." + std::to_string(source));
      break;
    case GeneratorKind::Degeneracy:
    case GeneratorKind::DualFace:
      if (source < 1) fail("no degeneracy on one-variable functions");
      if (index < 0 || index > source) fail("index out of range 0.." + std::to_string(source));
      break;
    case GeneratorKind::Cyclic:
    case GeneratorKind::CyclicInverse:
    case GeneratorKind::LastFace:
    case GeneratorKind::DualCyclic:
      break;
  }
}

int Generator::target(int source) const {
  validate(source);
  switch (kind) {
    case GeneratorKind::Face:
    case GeneratorKind::LastFace:
    case GeneratorKind::DualDegeneracy:
      return source + 1;
    case GeneratorKind::Degeneracy:
    case GeneratorKind::DualFace:
      return source - 1;
    default:
      return source;
  }
}

std::string Generator::token() const {
  std::string i = std::to_string(index);
  switch (kind) {
    case GeneratorKind::Face: return "d" + i;
    case GeneratorKind::Degeneracy: return "s" + i;
    case GeneratorKind::Cyclic: return "t";
    case GeneratorKind::CyclicInverse: return "t^-1";
    case GeneratorKind::LastFace: return "dlast";
    case GeneratorKind::Partial: return "p" + i;
    case GeneratorKind::DualFace: return "Dd" + i;
    case GeneratorKind::DualDegeneracy: return "Ds" + i;
    case GeneratorKind::DualCyclic: return "Dt";
  }
  return "?";
}

// ---------------------------------------------------------------- words

namespace {

Generator parse_token(std::string_view tok, std::size_t pos) {
  if (tok == "t") return Generator::cyclic();
  if (tok == "t^-1") return Generator::cyclic_inverse();
  if (tok == "dlast") return Generator::last_face();
  if (tok == "Dt") return Generator::dual_cyclic();
  struct Prefix {
    std::string_view text;
    GeneratorKind kind;
  };
  static const Prefix prefixes[] = {
      {"Dd", GeneratorKind::DualFace}, {"Ds", GeneratorKind::DualDegeneracy},
      {"d", GeneratorKind::Face},      {"s", GeneratorKind::Degeneracy},
      {"p", GeneratorKind::Partial},
  };
  for (const auto& p : prefixes) {
    if (tok.substr(0, p.text.size()) != p.text) continue;
    auto digits = tok.substr(p.text.size());
    if (digits.empty()) throw ParseError("missing index after '" + std::string(p.text) + "'", pos);
    int value = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(digits[k])))
        throw ParseError("bad index in token '" + std::string(tok) + "'", pos + p.text.size() + k);
      value = value * 10 + (digits[k] - '0');
      if (value > 1000) throw ParseError("index too large", pos);
    }
    return {p.kind, value};
  }
  throw ParseError("unknown token '" + std::string(tok) + "'", pos);
}

}  // namespace

OperatorWord OperatorWord::parse(std::string_view text) {
  std::vector<Generator> letters;
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    letters.push_back(parse_token(text.substr(start, k - start), start));
  }
  return OperatorWord(std::move(letters));
}

int OperatorWord::target(int source) const {
  int a = source;
  for (std::size_t k = letters_.size(); k-- > 0;) {
    try {
      a = letters_[k].target(a);
    } catch (const ArityError& e) {
      throw ArityError("letter " + std::to_string(k) + " (" + letters_[k].token() + "): " + e.what());
    }
  }
  return a;
}

std::string OperatorWord::to_string() const {
  if (letters_.empty()) return "id";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) s += (k ? " " : "") + letters_[k].token();
  return s;
}

OperatorWord OperatorWord::then_after(const OperatorWord& other) const {
  auto l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return OperatorWord(std::move(l));
}

OperatorWord word(std::initializer_list<Generator> letters) { return OperatorWord(letters); }

// ---------------------------------------------------------------- term actions

namespace {

template <class Map>
BracketTerm relabel(const BracketTerm& t, int new_arity, Map map) {
  std::vector<Slot> slots = t.slots();
  for (auto& s : slots) {
    for (int& v : s) v = map(v);
    std::sort(s.begin(), s.end());
  }
  return BracketTerm(t.symbol(), new_arity, std::move(slots));
}

// Divided difference in the j-th variable. When x_j occurs several times the
// generalized Leibniz rule splits the occurrences: those before the chosen one
// (ordered by slot) keep x_j, those after become x_{j+1}.
std::vector<BracketTerm> face_term(int j, const BracketTerm& t) {
  const int m = t.arity();
  std::vector<BracketTerm> out;
  const int slots = t.slot_count();
  for (int star = 0; star < slots; ++star) {
    int c = static_cast<int>(std::count(t.slot(star).begin(), t.slot(star).end(), j));
    for (int q = 1; q <= c; ++q) {
      std::vector<Slot> ns;
      for (int s = 0; s < slots; ++s) {
        Slot slot;
        for (int v : t.slot(s)) {
          if (v == j) continue;
          slot.push_back(v < j ? v : v + 1);
        }
        int cs = static_cast<int>(std::count(t.slot(s).begin(), t.slot(s).end(), j));
        if (s < star) slot.insert(slot.end(), cs, j);
        if (s > star) slot.insert(slot.end(), cs, j + 1);
        if (s == star) {
          slot.insert(slot.end(), q, j);
          slot.insert(slot.end(), c - q + 1, j + 1);
        }
        std::sort(slot.begin(), slot.end());
        ns.push_back(std::move(slot));
      }
      out.emplace_back(t.symbol(), m + 1, std::move(ns));
    }
  }
  return out;
}

template <class TermMap>
SpectralExpr map_terms(const SpectralExpr& e, int new_arity, TermMap f) {
  SpectralExpr out(e.symbol(), new_arity, e.slot_count());
  for (const auto& [t, c] : e.terms())
    for (const auto& nt : f(t)) out.add(nt, c);
  return out;
}

void check(const Generator& g, const SpectralExpr& e) { g.validate(e.arity()); }

}  // namespace

SpectralExpr face(int j, const SpectralExpr& e) {
  check(Generator::face(j), e);
  return map_terms(e, e.arity() + 1, [j](const BracketTerm& t) { return face_term(j, t); });
}

SpectralExpr degeneracy(int j, const SpectralExpr& e) {
  check(Generator::degeneracy(j), e);
  const int m = e.arity();
  return map_terms(e, m - 1, [j, m](const BracketTerm& t) {
    if (j == m)
      return std::vector<BracketTerm>{relabel(t, m - 1, [m](int v) { return v == m ? 0 : v; })};
    return std::vector<BracketTerm>{relabel(t, m - 1, [j](int v) { return v <= j ? v : v - 1; })};
  });
}

SpectralExpr cyclic(const SpectralExpr& e) {
  const int m = e.arity();
  return map_terms(e, m, [m](const BracketTerm& t) {
    return std::vector<BracketTerm>{relabel(t, m, [m](int v) { return (v + m) % (m + 1); })};
  });
}

SpectralExpr cyclic_inverse(const SpectralExpr& e) {
  const int m = e.arity();
  return map_terms(e, m, [m](const BracketTerm& t) {
    return std::vector<BracketTerm>{relabel(t, m, [m](int v) { return (v + 1) % (m + 1); })};
  });
}

SpectralExpr last_face(const SpectralExpr& e) { return cyclic(face(0, e)); }

SpectralExpr partial(int i, const SpectralExpr& e) {
  check(Generator::partial(i), e);
  return degeneracy(i, face(i, e));
}

SpectralExpr dual_face(int j, const SpectralExpr& e) {
  check(Generator::dual_face(j), e);
  return degeneracy(j, e);
}

SpectralExpr dual_degeneracy(int j, const SpectralExpr& e) {
  check(Generator::dual_degeneracy(j), e);
  return j + 1 <= e.arity() ? face(j + 1, e) : last_face(e);
}

SpectralExpr dual_cyclic(const SpectralExpr& e) { return cyclic_inverse(e); }

SpectralExpr apply(const Generator& g, const SpectralExpr& e) {
  switch (g.kind) {
    case GeneratorKind::Face: return face(g.index, e);
    case GeneratorKind::Degeneracy: return degeneracy(g.index, e);
    case GeneratorKind::Cyclic: return cyclic(e);
    case GeneratorKind::CyclicInverse: return cyclic_inverse(e);
    case GeneratorKind::LastFace: return last_face(e);
    case GeneratorKind::Partial: return partial(g.index, e);
    case GeneratorKind::DualFace: return dual_face(g.index, e);
    case GeneratorKind::DualDegeneracy: return dual_degeneracy(g.index, e);
    case GeneratorKind::DualCyclic: return dual_cyclic(e);
  }
  throw ArityError("unknown generator");
}

SpectralExpr apply_word(const OperatorWord& w, const SpectralExpr& e) {
  w.target(e.arity());  // reports the failing letter before any work
  SpectralExpr cur = e;
  const auto& l = w.letters();
  for (std::size_t k = l.size(); k-- > 0;) cur = apply(l[k], cur);
  return cur;
}

std::string OperatorSum::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, w] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1) s += format_rational(mag) + "*";
    s += terms.size() > 1 && w.letters().size() > 1 ? "(" + w.to_string() + ")" : w.to_string();
    first = false;
  }
  return s;
}

SpectralExpr apply_sum(const OperatorSum& s, const SpectralExpr& e) {
  if (s.terms.empty()) throw ArityError("empty operator sum has no target arity");
  std::optional<SpectralExpr> out;
  for (const auto& [c, w] : s.terms) {
    auto r = apply_word(w, e);
    if (!out)
      out = scale(r, c);
    else
      out->add(r, c);
  }
  return *out;
}

}  // namespace rearrange
