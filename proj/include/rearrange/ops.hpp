#pragma once

#include "rearrange/spectral_expr.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <map>
#include <vector>

namespace rearrange {

enum class GeneratorKind {
  Face,            ///< delta_j : C(n) -> C(n+1), 0 <= j <= n
  Degeneracy,      ///< sigma_j : C(n) -> C(n-1), 0 <= j <= n (j = n: extra degeneracy x_n -> x_0)
  Cyclic,          ///< tau : C(n) -> C(n)
  CyclicInverse,   ///< tau^-1
  LastFace,        ///< delta_{n+1} = tau delta_0
  Partial,         ///< d/dx_i = sigma_i delta_i
  DualFace,        ///< d_j = sigma_j
  DualDegeneracy,  ///< s_j = delta_{j+1} (s_n is the last face)
  DualCyclic,      ///< t = tau^-1
};

struct Generator {
  GeneratorKind kind;
  int index = 0;

  static Generator face(int j) { return {GeneratorKind::Face, j}; }
  static Generator degeneracy(int j) { return {GeneratorKind::Degeneracy, j}; }
  static Generator cyclic() { return {GeneratorKind::Cyclic, 0}; }
  static Generator cyclic_inverse() { return {GeneratorKind::CyclicInverse, 0}; }
  static Generator last_face() { return {GeneratorKind::LastFace, 0}; }
  static Generator partial(int i) { return {GeneratorKind::Partial, i}; }
  static Generator dual_face(int j) { return {GeneratorKind::DualFace, j}; }
  static Generator dual_degeneracy(int j) { return {GeneratorKind::DualDegeneracy, j}; }
  static Generator dual_cyclic() { return {GeneratorKind::DualCyclic, 0}; }

  /// Throws ArityError when the generator is not defined on C(source).
  void validate(int source) const;
  /// Arity after application to C(source); validates first.
  int target(int source) const;
  /// CLI token: d0 s1 t t^-1 dlast p0 Dd0 Ds0 Dt.
  std::string token() const;

  bool operator==(const Generator&) const = default;
};

/// Generators in composition order: the rightmost letter acts first, as in sigma_0 delta_0.
class OperatorWord {
 public:
  OperatorWord() = default;
  explicit OperatorWord(std::vector<Generator> letters) : letters_(std::move(letters)) {}

  /// Whitespace separated tokens, written in composition order.
  static OperatorWord parse(std::string_view text);

  const std::vector<Generator>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Target arity for a given source; throws ArityError naming the failing letter.
  int target(int source) const;
  std::string to_string() const;

  /// this after other: (a b) then (c d) = a b c d.
  OperatorWord then_after(const OperatorWord& other) const;

  bool operator==(const OperatorWord&) const = default;

 private:
  std::vector<Generator> letters_;
};

OperatorWord word(std::initializer_list<Generator> letters);

SpectralExpr face(int j, const SpectralExpr& e);
SpectralExpr degeneracy(int j, const SpectralExpr& e);
SpectralExpr cyclic(const SpectralExpr& e);
SpectralExpr cyclic_inverse(const SpectralExpr& e);
SpectralExpr last_face(const SpectralExpr& e);
SpectralExpr partial(int i, const SpectralExpr& e);
SpectralExpr dual_face(int j, const SpectralExpr& e);
SpectralExpr dual_degeneracy(int j, const SpectralExpr& e);
SpectralExpr dual_cyclic(const SpectralExpr& e);

SpectralExpr apply(const Generator& g, const SpectralExpr& e);
SpectralExpr apply_word(const OperatorWord& w, const SpectralExpr& e);

/// Rational combination of operator words, e.g. delta_0 sigma_0 - sigma_0 delta_1.
struct OperatorSum {
  std::vector<std::pair<Rational, OperatorWord>> terms;

  static OperatorSum single(OperatorWord w) { return {{{Rational(1), std::move(w)}}}; }
  OperatorSum& plus(const Rational& c, OperatorWord w) {
    terms.emplace_back(c, std::move(w));
    return *this;
  }
  std::string to_string() const;
};

SpectralExpr apply_sum(const OperatorSum& s, const SpectralExpr& e);

/// One instance of a relation, applied to the generic symbol on C(n).
struct RelationInstance {
  std::string relation;
  int n;
  int i;
  int j;
  OperatorSum lhs_ops;
  OperatorSum rhs_ops;
  SpectralExpr lhs;
  SpectralExpr rhs;
  bool holds;

  /// Sortable identifier, e.g. "face-face/n=2/i=0/j=1".
  std::string key() const;
};

struct RelationReport {
  std::vector<RelationInstance> instances;
  bool all_hold() const;
  std::size_t failures() const;
  /// Instances per relation id.
  std::map<std::string, std::size_t> counts() const;
};

/// Relations of the category acting on spectral functions, for all valid indices and n <= n_max.
RelationReport verify_theorem_relations(int n_max);
/// The d/s/t form of the same relations.
RelationReport verify_dual_relations(int n_max);

/// Builds an instance on C(n) from two operator sums and compares canonical forms.
RelationInstance make_instance(std::string relation, int n, int i, int j, OperatorSum lhs,
                               OperatorSum rhs);

}  // namespace rearrange
