#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rearrange::simplicial {

/// Non-decreasing map [source] -> [target].
struct SimplicialMap {
  int source;
  int target;
  std::vector<int> values;

  static SimplicialMap identity(int n);
  /// delta_i : [n-1] -> [n], missing i.
  static SimplicialMap face(int i, int n);
  /// sigma_j : [n+1] -> [n], hitting j twice.
  static SimplicialMap degeneracy(int j, int n);

  bool is_valid() const;
  bool operator==(const SimplicialMap&) const = default;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// All non-decreasing maps [n] -> [m].
std::vector<SimplicialMap> all_maps(int n, int m);

/// delta_{i_1} ... delta_{i_r} sigma_{j_1} ... sigma_{j_s}, i descending, j ascending.
struct NormalForm {
  int source = 0;
  std::vector<int> faces;
  std::vector<int> degeneracies;
  int target() const;
  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const SimplicialMap& f);
/// Throws std::invalid_argument when a letter is out of range.
SimplicialMap realize(const NormalForm& nf);
std::string to_string(const NormalForm& nf);

/// Number of index sequences i_1>..>i_r, j_1<..<j_s (any r, s) whose composite is f.
int count_decompositions(const SimplicialMap& f);

// ------------------------------------------------------------ cyclic category

enum class LetterKind { Face, Degeneracy, Cyclic };

struct Letter {
  LetterKind kind;
  int index = 0;
  bool operator==(const Letter&) const = default;
};

/// Word in the generators of the cyclic category, composition order (rightmost acts first),
/// starting at [source]. Face delta_i may take i = 0..a+1 on a source [a].
struct CyclicWord {
  int source = 0;
  std::vector<Letter> letters;
  int target() const;  ///< throws std::invalid_argument when ill-typed
  std::string to_string() const;
};

/// simplicial o tau_source^power.
struct CyclicMorphism {
  SimplicialMap simplicial;
  int power;
  bool operator==(const CyclicMorphism&) const = default;
};

enum class RewriteOrder { LeftmostFirst, RightmostFirst, Random };

struct CyclicNormalForm {
  CyclicMorphism morphism;
  NormalForm simplicial_nf;
  CyclicWord rewritten;  ///< Delta-letters followed by tau^power
  int steps = 0;
};

/// Pushes every tau to the right using
/// tau delta_i -> delta_{i-1} tau, tau delta_0 -> delta_n, tau sigma_i -> sigma_{i-1} tau,
/// tau sigma_0 -> sigma_n tau^2 and tau^{n+1} -> id.
CyclicNormalForm cyclic_normal_form(const CyclicWord& w, RewriteOrder order = RewriteOrder::LeftmostFirst,
                                    std::uint64_t seed = 0);

/// Morphism of the cyclic category as a non-decreasing map Z -> Z with
/// f(k + source + 1) = f(k) + target + 1, stored on 0..source and normalized so f(0) in [0, target].
/// tau_n is k -> k - 1.
struct CyclicMap {
  int source;
  int target;
  std::vector<long> values;

  static CyclicMap identity(int n);
  static CyclicMap face(int i, int n);        ///< i = 0..n, [n-1] -> [n]
  static CyclicMap degeneracy(int j, int n);  ///< j = 0..n, [n+1] -> [n]
  static CyclicMap tau(int n);
  static CyclicMap tau_inverse(int n);
  /// sigma_0 tau^{-1} : [n+1] -> [n], identifying n+1 with 0.
  static CyclicMap extra_degeneracy(int n);

  long operator()(long k) const;
  bool is_valid() const;
  bool operator==(const CyclicMap&) const = default;
};

CyclicMap compose(const CyclicMap& g, const CyclicMap& f);
CyclicMap embed(const SimplicialMap& f);
CyclicMap realize(const CyclicWord& w);
CyclicMap realize(const CyclicMorphism& m);
std::vector<CyclicMap> all_cyclic_maps(int n, int m);

/// Well-typed words of exactly `length` letters starting at [source], never passing an
/// object above [max_arity].
std::vector<CyclicWord> enumerate_words(int source, int length, int max_arity);
CyclicWord random_word(int source, int length, int max_arity, std::uint64_t seed);

struct ConfluenceReport {
  std::size_t words = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  ///< at most a few
};

/// Every rewrite order (leftmost, rightmost, several random seeds) must reach the same
/// rewritten word, and that word must realize the same map as the input.
/// Words of length <= exhaustive_length are enumerated, longer ones up to max_length sampled.
ConfluenceReport check_confluence(int max_length, int max_arity, int exhaustive_length, int samples_per_length,
                                  std::uint64_t seed);

// ------------------------------------------------------------ opposite category

enum class OpKind { D, S, T };

/// Generator of the opposite cyclic category: d_i : [n] -> [n-1], s_i : [n] -> [n+1], t : [n] -> [n].
struct OpLetter {
  OpKind kind;
  int index = 0;
};

/// Composition order, starting at [source].
struct OpWord {
  int source = 0;
  std::vector<OpLetter> letters;
  std::string to_string() const;
};

/// The same morphism read in the cyclic category with arrows reversed (d = delta*, s = sigma*, t = tau*).
CyclicMap opposite_realize(const OpWord& w);
/// Image under the duality functor: d_i -> sigma_i (d_n -> extra degeneracy), s_i -> delta_{i+1}, t -> tau^{-1}.
CyclicMap duality(const OpLetter& g, int source);
CyclicMap duality(const OpWord& w);

struct PresentationCheck {
  std::string name;
  int n;
  int i;
  int j;
  bool holds;
};

struct PresentationReport {
  std::vector<PresentationCheck> checks;
  bool all_hold() const;
  std::size_t failures() const;
};

/// Defining relations of the cyclic category and of its opposite, checked as equalities
/// of concrete maps for n <= n_max.
PresentationReport verify_deltaC_presentation(int n_max);
/// Every relation of the opposite category mapped through the duality functor.
PresentationReport verify_duality(int n_max);

}  // namespace rearrange::simplicial
