#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rearrange {

/// Multiset of variable indices filling one argument of a function symbol.
/// A slot {i0,...,ik} stands for the k-fold divided difference f[..., x_i0, ..., x_ik, ...].
using Slot = std::vector<int>;

/// One slot assignment f([..],...,[..]) over the variables x_0..x_m.
class BracketTerm {
 public:
  /// Throws ArityError unless every index lies in 0..arity, every slot is
  /// non-empty and every variable occurs somewhere.
  BracketTerm(std::string symbol, int arity, std::vector<Slot> slots);

  const std::string& symbol() const { return symbol_; }
  /// m: the variables are x_0..x_m.
  int arity() const { return arity_; }
  int slot_count() const { return static_cast<int>(slots_.size()); }
  const std::vector<Slot>& slots() const { return slots_; }
  const Slot& slot(int k) const { return slots_.at(static_cast<std::size_t>(k)); }

  bool is_canonical() const;
  /// Total number of occurrences of x_var over all slots.
  int occurrences(int var) const;

  auto operator<=>(const BracketTerm&) const = default;
  bool operator==(const BracketTerm&) const = default;

 private:
  std::string symbol_;
  int arity_;
  std::vector<Slot> slots_;
};

/// Sorts every slot. Idempotent.
BracketTerm canonicalize(const BracketTerm& term);

/// f([x0],[x1],...,[xm]).
BracketTerm generic_term(int arity, const std::string& symbol = "f");

/// Bracket notation, e.g. "f([x0,x1],[x2])".
std::string to_string(const BracketTerm& term);

/// Reading of a purely co-simplicial term as a non-decreasing map psi: [m] -> [n].
struct SimplicialShadow {
  std::vector<int> psi;                ///< psi[v] = slot holding x_v
  std::vector<int> derivative_orders;  ///< per slot: repeated copies beyond the first of each variable
  /// Slots hit by more than one distinct variable.
  std::vector<int> stationary_points() const;
  bool operator==(const SimplicialShadow&) const = default;
};

/// Throws std::invalid_argument("not purely co-simplicial") when a variable occurs in
/// two slots or the slot assignment is not monotone.
SimplicialShadow to_simplicial_shadow(const BracketTerm& term);

}  // namespace rearrange
