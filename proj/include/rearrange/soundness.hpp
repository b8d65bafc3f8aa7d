#pragma once
// Relation instances evaluated on concrete functions: the bracket engine against
// independent function-level semantics.

#include "rearrange/ops.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rearrange {

struct SoundnessCase {
  std::string key;
  std::string basis;
  double relative_error = 0.0;  ///< worst pairwise disagreement of the four evaluations
  bool exact_checked = false;
  bool exact_ok = true;         ///< rational path, when checked
  bool pass = false;
};

struct SoundnessReport {
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<SoundnessCase> cases;
  bool all_pass() const;
  std::size_t failures() const;
  double worst() const;
};

/// Distinct positive weights for a ridge function of `count` variables.
std::vector<Rational> ridge_weights(int count);

/// Every instance is evaluated with the ridge functions exp, x^5 and omega_{2+i} of
/// sum_k w_k x_k at random points pairwise >= 0.5 apart. Symbolic lhs/rhs are compared
/// with the operator words applied directly to the function; x^5 is also checked exactly.
SoundnessReport numeric_soundness(const RelationReport& relations, std::uint64_t seed, double tol = 1e-9);

/// Instances with n <= n_max pushed through S_h on a random d x d context, with the x^5
/// ridge function: bracket evaluation against the exact polynomial image of each side.
SoundnessReport matrix_soundness(const RelationReport& relations, int d, int n_max, std::uint64_t seed,
                                 double tol = 1e-9);

}  // namespace rearrange
