#pragma once

#include "rearrange/bracket.hpp"
#include "rearrange/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace rearrange {

/// Finite rational combination of canonical bracket terms sharing one symbol,
/// one variable count (m+1) and one slot count (n+1).
class SpectralExpr {
 public:
  SpectralExpr(std::string symbol, int arity, int slot_count);

  /// f([x0],...,[xm]) with coefficient 1.
  static SpectralExpr generic(int arity, const std::string& symbol = "f");
  static SpectralExpr of(const BracketTerm& term, const Rational& coeff = 1);

  /// Adds c * canonicalize(term); drops the entry if the coefficient cancels.
  void add(const BracketTerm& term, const Rational& coeff);
  /// Adds c * other, coefficient-wise.
  void add(const SpectralExpr& other, const Rational& coeff = 1);

  const std::string& symbol() const { return symbol_; }
  int arity() const { return arity_; }
  int slot_count() const { return slot_count_; }
  const std::map<BracketTerm, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const BracketTerm& term) const;

  bool same_shape(const SpectralExpr& other) const;
  bool operator==(const SpectralExpr& other) const;

  SpectralExpr operator-() const;
  friend SpectralExpr operator+(const SpectralExpr& a, const SpectralExpr& b);
  friend SpectralExpr operator-(const SpectralExpr& a, const SpectralExpr& b);

 private:
  void require_shape(const BracketTerm& term) const;

  std::string symbol_;
  int arity_;
  int slot_count_;
  std::map<BracketTerm, Rational> terms_;
};

SpectralExpr add(const SpectralExpr& a, const SpectralExpr& b);
SpectralExpr scale(const SpectralExpr& a, const Rational& c);

/// "f([x0,x1],[x2]) - 1/2*f([x0],[x1,x2])"; "0" for the empty expression.
std::string to_string(const SpectralExpr& e);

/// {"m","n","terms":[{"coeff":"p/q","slots":[[..],..]}]}; "symbol" added when it is not "f".
nlohmann::json to_json(const SpectralExpr& e);
SpectralExpr spectral_expr_from_json(const nlohmann::json& j);

}  // namespace rearrange
