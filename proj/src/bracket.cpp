#include "rearrange/bracket.hpp"

#include "rearrange/errors.hpp"

#include <algorithm>
#include <set>

namespace rearrange {

BracketTerm::BracketTerm(std::string symbol, int arity, std::vector<Slot> slots)
    : symbol_(std::move(symbol)), arity_(arity), slots_(std::move(slots)) {
  if (arity_ < 0) throw ArityError("negative arity");
  if (slots_.empty()) throw ArityError("a bracket term needs at least one slot");
  std::vector<bool> seen(static_cast<std::size_t>(arity_) + 1, false);
  for (const auto& s : slots_) {
    if (s.empty()) throw ArityError("empty slot in bracket term");
    for (int v : s) {
      if (v < 0 || v > arity_)
        throw ArityError("variable x" + std::to_string(v) + " out of range 0.." +
                         std::to_string(arity_));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int v = 0; v <= arity_; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw ArityError("variable x" + std::to_string(v) + " occurs in no slot");
}

bool BracketTerm::is_canonical() const {
  return std::all_of(slots_.begin(), slots_.end(),
                     [](const Slot& s) { return std::is_sorted(s.begin(), s.end()); });
}

int BracketTerm::occurrences(int var) const {
  int c = 0;
  for (const auto& s : slots_) c += static_cast<int>(std::count(s.begin(), s.end(), var));
  return c;
}

BracketTerm canonicalize(const BracketTerm& term) {
  auto slots = term.slots();
  for (auto& s : slots) std::sort(s.begin(), s.end());
  return BracketTerm(term.symbol(), term.arity(), std::move(slots));
}

BracketTerm generic_term(int arity, const std::string& symbol) {
  std::vector<Slot> slots;
  for (int v = 0; v <= arity; ++v) slots.push_back({v});
  return BracketTerm(symbol, arity, std::move(slots));
}

std::string to_string(const BracketTerm& term) {
  std::string out = term.symbol() + "(";
  for (int k = 0; k < term.slot_count(); ++k) {
    if (k) out += ",";
    out += "[";
    const auto& s = term.slot(k);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += "x" + std::to_string(s[i]);
    }
    out += "]";
  }
  return out + ")";
}

std::vector<int> SimplicialShadow::stationary_points() const {
  std::vector<int> hits(derivative_orders.size(), 0);
  for (int p : psi) ++hits[static_cast<std::size_t>(p)];
  std::vector<int> out;
  for (std::size_t k = 0; k < hits.size(); ++k)
    if (hits[k] > 1) out.push_back(static_cast<int>(k));
  return out;
}

SimplicialShadow to_simplicial_shadow(const BracketTerm& term) {
  SimplicialShadow sh;
  sh.psi.assign(static_cast<std::size_t>(term.arity()) + 1, -1);
  sh.derivative_orders.assign(static_cast<std::size_t>(term.slot_count()), 0);
  for (int k = 0; k < term.slot_count(); ++k) {
    std::set<int> distinct(term.slot(k).begin(), term.slot(k).end());
    sh.derivative_orders[static_cast<std::size_t>(k)] =
        static_cast<int>(term.slot(k).size() - distinct.size());
    for (int v : distinct) {
      if (sh.psi[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("not purely co-simplicial: x" + std::to_string(v) +
                                    " occurs in two slots");
      sh.psi[static_cast<std::size_t>(v)] = k;
    }
  }
  if (!std::is_sorted(sh.psi.begin(), sh.psi.end()))
    throw std::invalid_argument("not purely co-simplicial: slot assignment is not monotone");
  return sh;
}

}  // namespace rearrange
