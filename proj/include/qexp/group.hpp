#pragma once

#include <cstdint>
#include <vector>

#include "qexp/gf2.hpp"
#include "qexp/spectral.hpp"

namespace qexp {

using Perm = std::vector<int>;  // images: p[i] is where i goes

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& a);
bool perm_is_bijection(const Perm& a);
int perm_sign(const Perm& a);

/// Enumerated finite group with a distinguished generating set. Elements are
/// canonical permutation encodings on a faithful point set; left_perms[s]
/// maps element index i to the index of S[s] * element[i] (the left regular
/// action used by cayley_gap).
struct FiniteGroupTable {
  std::size_t order = 0;
  int degree = 0;                    // points the encoding permutes
  std::vector<Perm> elements;        // elements[0] is the identity
  std::size_t identity_index = 0;
  std::vector<std::size_t> generator_indices;
  std::vector<std::vector<std::size_t>> left_perms;
  bool symmetric = false;            // generating set closed under inverses

  /// Multiplication oracle: composes encodings and resolves the index
  /// (table-backed below kMultTableMax, on-the-fly above).
  std::size_t multiply(std::size_t i, std::size_t j) const;

  static constexpr std::size_t kMultTableMax = 2048;
  mutable std::vector<std::uint32_t> mult_table;  // lazily built
};

inline constexpr std::size_t kDefaultMaxOrder = 1000000;

/// Breadth-first closure of the generating permutations. Duplicated
/// generators are removed; with symmetric_close the inverses are appended
/// first. Throws OrderExceededError past max_order and
/// std::invalid_argument on non-bijective input.
FiniteGroupTable enumerate_group(std::vector<Perm> generators,
                                 std::size_t max_order = kDefaultMaxOrder,
                                 bool symmetric_close = true);

/// GF(2)-matrix generators, converted to their faithful action on the
/// nonzero vectors of F_2^k. Throws NonInvertibleGeneratorError.
FiniteGroupTable enumerate_group(const std::vector<GF2Matrix>& generators,
                                 std::size_t max_order = kDefaultMaxOrder,
                                 bool symmetric_close = true);

/// epsilon(lambda_G, S): spectral gap of the left regular representation.
/// Deflates the constants and uses the permutation fast path (index
/// shuffles) when the order is above the dense threshold.
SpectralReport cayley_gap(const FiniteGroupTable& g,
                          const SolverOptions& opts = {});

// Canonical constructions, all with symmetric generating sets.

/// Z_m with S = {+1, -1} (one element when m = 2).
FiniteGroupTable cyclic_group(int m);

/// Symmetric group on m points, S = {(01), (01...m-1), inverse cycle}.
FiniteGroupTable symmetric_group(int m);

/// Generating matrices {I + E_12, shift, shift^-1} of SL_{3k}(F_2),
/// deduplicated (I + E_12 is an involution).
std::vector<GF2Matrix> sl3k_generators(int k);

/// SL_{3k}(F_2) enumerated through its action on the 2^(3k)-1 nonzero
/// vectors; practical for k = 1 only (order 168).
FiniteGroupTable sl3k_group(int k, std::size_t max_order = kDefaultMaxOrder);

}  // namespace qexp
