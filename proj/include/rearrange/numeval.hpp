#pragma once

#include "rearrange/base_function.hpp"
#include "rearrange/bracket.hpp"
#include "rearrange/spectral_expr.hpp"

#include <random>
#include <span>
#include <vector>

namespace rearrange {

/// Newton table over sorted nodes (equal nodes adjacent).
/// table[k][i] = f[nodes[i], ..., nodes[i+k]]; a run of k+1 equal nodes is seeded with f^(k)/k!.
template <class T>
struct DividedDifferenceTable {
  std::vector<T> nodes;
  std::vector<std::vector<T>> table;
  const T& value() const { return table.back().front(); }
};

DividedDifferenceTable<Complex> divided_difference_table(const BaseFunction& f,
                                                         std::span<const Complex> nodes);
DividedDifferenceTable<Rational> divided_difference_table(const BaseFunction& f,
                                                          std::span<const Rational> nodes);

/// Confluent divided difference f[nodes...] of a one-variable function.
Complex divided_difference(const BaseFunction& f, std::span<const Complex> nodes);
Rational divided_difference(const BaseFunction& f, std::span<const Rational> nodes);

/// The divided difference as a linear functional:
/// f[nodes] = sum weight * f^(order)(node) / order!.
template <class T>
struct FunctionalEntry {
  T node;
  int order;
  T weight;
};
std::vector<FunctionalEntry<Complex>> divided_difference_functional(std::span<const Complex> nodes);
std::vector<FunctionalEntry<Rational>> divided_difference_functional(std::span<const Rational> nodes);

/// One value per variable x_0..x_m.
using PointAssignment = std::vector<Complex>;

/// Iterated (confluent) divided differences, one per slot, of the base function.
Complex eval_bracket_term(const BracketTerm& term, const BaseFunction& base,
                          std::span<const Complex> pts);
Rational eval_bracket_term(const BracketTerm& term, const BaseFunction& base,
                           std::span<const Rational> pts);

Complex eval_expr(const SpectralExpr& expr, const BaseFunction& base, std::span<const Complex> pts);
Rational eval_expr(const SpectralExpr& expr, const BaseFunction& base, std::span<const Rational> pts);

/// Sum of |coeff * term value|: the magnitude scale of an evaluation, used to judge cancellation.
double eval_expr_scale(const SpectralExpr& expr, const BaseFunction& base,
                       std::span<const Complex> pts);

struct CompositionResidual {
  Complex lhs;
  Complex rhs;
  double absolute;
  double relative;
};

/// (f[y_0..y_q, z])[x_0..x_p]_z against f[y_0..y_q, x_0..x_p]. The outer difference over
/// z uses the explicit formula, so the x nodes must be distinct.
CompositionResidual composition_rule_check(const BaseFunction& f, std::span<const Complex> ys,
                                           std::span<const Complex> xs);

/// |a - b| / max(|a|, |b|, scale, tiny).
double relative_error(Complex a, Complex b, double scale = 0.0);

/// `count` reals in [lo, hi], pairwise at least `gap` apart, in random order.
std::vector<double> separated_points(int count, std::mt19937_64& rng, double lo = -3.0,
                                     double hi = 3.0, double gap = 0.5);
/// Same, as rationals with denominator `den`.
std::vector<Rational> separated_rationals(int count, std::mt19937_64& rng, int den = 4,
                                          int lo = -3, int hi = 3, Rational gap = Rational(1, 2));

PointAssignment to_complex(std::span<const double> xs);
PointAssignment to_complex(std::span<const Rational> xs);

}  // namespace rearrange
