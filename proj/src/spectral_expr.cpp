#include "rearrange/spectral_expr.hpp"

#include "rearrange/errors.hpp"

namespace rearrange {

SpectralExpr::SpectralExpr(std::string symbol, int arity, int slot_count)
    : symbol_(std::move(symbol)), arity_(arity), slot_count_(slot_count) {
  if (arity_ < 0 || slot_count_ < 1) throw ArityError("invalid expression shape");
}

SpectralExpr SpectralExpr::generic(int arity, const std::string& symbol) {
  return of(generic_term(arity, symbol));
}

SpectralExpr SpectralExpr::of(const BracketTerm& term, const Rational& coeff) {
  SpectralExpr e(term.symbol(), term.arity(), term.slot_count());
  e.add(term, coeff);
  return e;
}

void SpectralExpr::require_shape(const BracketTerm& term) const {
  if (term.symbol() != symbol_ || term.arity() != arity_ || term.slot_count() != slot_count_)
    throw ArityError("term " + to_string(term) + " does not match expression shape (symbol " +
                     symbol_ + ", m=" + std::to_string(arity_) +
                     ", n=" + std::to_string(slot_count_ - 1) + ")");
}

void SpectralExpr::add(const BracketTerm& term, const Rational& coeff) {
  require_shape(term);
  if (coeff == 0) return;
  auto key = term.is_canonical() ? term : canonicalize(term);
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void SpectralExpr::add(const SpectralExpr& other, const Rational& coeff) {
  if (!same_shape(other))
    throw ArityError("cannot add expressions of different shapes");
  for (const auto& [t, c] : other.terms_) add(t, c * coeff);
}

Rational SpectralExpr::coefficient(const BracketTerm& term) const {
  auto it = terms_.find(canonicalize(term));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SpectralExpr::same_shape(const SpectralExpr& other) const {
  return symbol_ == other.symbol_ && arity_ == other.arity_ && slot_count_ == other.slot_count_;
}

bool SpectralExpr::operator==(const SpectralExpr& other) const {
  return same_shape(other) && terms_ == other.terms_;
}

SpectralExpr SpectralExpr::operator-() const { return scale(*this, -1); }

SpectralExpr operator+(const SpectralExpr& a, const SpectralExpr& b) {
  SpectralExpr out = a;
  out.add(b);
  return out;
}

SpectralExpr operator-(const SpectralExpr& a, const SpectralExpr& b) {
  SpectralExpr out = a;
  out.add(b, -1);
  return out;
}

SpectralExpr add(const SpectralExpr& a, const SpectralExpr& b) { return a + b; }

SpectralExpr scale(const SpectralExpr& a, const Rational& c) {
  SpectralExpr out(a.symbol(), a.arity(), a.slot_count());
  out.add(a, c);
  return out;
}

std::string to_string(const SpectralExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += format_rational(mag) + "*";
    out += to_string(t);
    first = false;
  }
  return out;
}

nlohmann::json to_json(const SpectralExpr& e) {
  nlohmann::json j;
  j["m"] = e.arity();
  j["n"] = e.slot_count() - 1;
  if (e.symbol() != "f") j["symbol"] = e.symbol();
  auto terms = nlohmann::json::array();
  for (const auto& [t, c] : e.terms())
    terms.push_back({{"coeff", format_fraction(c)}, {"slots", t.slots()}});
  j["terms"] = std::move(terms);
  return j;
}

SpectralExpr spectral_expr_from_json(const nlohmann::json& j) {
  std::string symbol = j.value("symbol", std::string("f"));
  int m = j.at("m").get<int>();
  int n = j.at("n").get<int>();
  SpectralExpr e(symbol, m, n + 1);
  for (const auto& t : j.at("terms"))
    e.add(BracketTerm(symbol, m, t.at("slots").get<std::vector<Slot>>()),
          parse_rational(t.at("coeff").get<std::string>()));
  return e;
}

}  // namespace rearrange
