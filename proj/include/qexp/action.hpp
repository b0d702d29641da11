#pragma once

#include <vector>

#include "qexp/group.hpp"

namespace qexp {

/// Generators acting as permutations of {0, ..., set_size-1}.
struct GroupAction {
  int set_size = 0;
  std::vector<Perm> generator_perms;
};

GroupAction make_action(int set_size, std::vector<Perm> generator_perms);

inline constexpr int kMaxActionSet = 4096;

/// Action of the SL_{3k}(F_2) generators on the nonzero vectors of
/// F_2^(3k) (projective points over F_2); |X| = 2^(3k) - 1.
/// Throws SetSizeExceededError when |X| would exceed kMaxActionSet.
GroupAction projective_space_action(int k);

/// Orbits of the generated group on ordered pairs X x X, by union-find on
/// pairs under the generators. Never enumerates the acting group.
std::size_t orbit_count_on_pairs(const GroupAction& a);

/// True iff there are exactly two orbits on pairs (diagonal plus one).
bool double_transitivity(const GroupAction& a);

bool action_transitive(const GroupAction& a);

/// Permutation matrices of the generators on l^2(X).
std::vector<Matrix> permutation_matrices(const GroupAction& a);

/// Permutation representation compressed to the mean-zero subspace, in the
/// deterministic Householder completion of the all-ones vector; one
/// (|X|-1)-dimensional unitary per generator. Throws NotTransitiveError on
/// intransitive or single-point actions.
std::vector<Matrix> koopman_rep(const GroupAction& a);

/// Commutant dimension of the permutation representation (numeric nullspace
/// route; must equal orbit_count_on_pairs). Capped at |X| <= 24 by the cost
/// of the stacked SVD.
int perm_rep_commutant_dim(const GroupAction& a);

/// Packages unitary generator images as a UnitaryTuple; the symmetric flag
/// is detected from adjoint closure.
UnitaryTuple rep_to_tuple(const std::vector<Matrix>& rep,
                          double tol = kUnitarityTol);

/// Left-translation action of a group on itself (degree = order).
GroupAction regular_action(const FiniteGroupTable& g);

/// The defining action of the table's generator encodings on their points.
GroupAction natural_action(const FiniteGroupTable& g);

}  // namespace qexp
