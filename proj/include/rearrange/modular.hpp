#pragma once
// Two-variable functions K(u, v) = Kt(v - u) rewritten in the difference variables
// y_j = x_j - x_{j-1}.

#include "rearrange/base_function.hpp"
#include "rearrange/rational.hpp"
#include "rearrange/spectral_expr.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace rearrange {

using LinearForm = std::vector<Rational>;

enum class Coordinates {
  Position,    ///< x_0..x_n
  Difference,  ///< y_1..y_n, y_j = x_j - x_{j-1}
};

/// Kt(argument) / (d_1 ... d_r) with linear forms in the current coordinates.
struct ModularTerm {
  LinearForm argument;
  std::vector<LinearForm> denominators;  ///< sorted, each with positive leading coefficient
  auto operator<=>(const ModularTerm&) const = default;
};

class ModularExpr {
 public:
  ModularExpr(Coordinates coords, int n);
  Coordinates coordinates() const { return coords_; }
  /// Variables x_0..x_n, or y_1..y_n.
  int n() const { return n_; }
  int variables() const;
  /// Normalizes the denominators first; throws DomainError on a zero denominator.
  void add(LinearForm argument, std::vector<LinearForm> denominators, const Rational& coeff);
  const std::map<ModularTerm, Rational>& terms() const { return terms_; }
  /// vars has variables() entries.
  Complex evaluate(const BaseFunction& profile, std::span<const Complex> vars) const;
  std::string to_string() const;
  bool operator==(const ModularExpr&) const = default;

 private:
  Coordinates coords_;
  int n_;
  std::map<ModularTerm, Rational> terms_;
};

/// Expands the divided differences of an expression in a two-variable symbol into
/// position coordinates. Throws DomainError on confluent slots, ArityError unless the
/// symbol has exactly two arguments.
ModularExpr expand_differences(const SpectralExpr& e);
ModularExpr to_modular(const SpectralExpr& e);
/// Position -> difference coordinates; every form must be translation invariant.
ModularExpr to_modular(const ModularExpr& position);
ModularExpr from_modular(const ModularExpr& modular);
/// Rewrites Kt(-l) as Kt(l) so that each argument has positive leading coefficient.
ModularExpr apply_evenness(const ModularExpr& e);

struct EvenComparison {
  bool even = false;             ///< Kt(-s) = Kt(s) at the sample points
  double residual_modular = 0;   ///< bracket evaluation vs difference-coordinate expansion
  double residual_even = 0;      ///< bracket evaluation vs the evenness-reduced expression
  ModularExpr closed{Coordinates::Difference, 2};
};

/// (delta_0 + delta_1 - delta_2)(K) for K(x_0, x_1) = Kt(x_1 - x_0), compared at `samples`
/// random well-separated triples.
EvenComparison cm_modular_compare(const BaseFunction& Kt, int samples, std::uint64_t seed);

}  // namespace rearrange
