#pragma once

#include <cstdint>

#include "qexp/rng.hpp"
#include "qexp/tuple.hpp"

namespace qexp {

/// Haar-distributed random unitary: QR of a complex Ginibre matrix with the
/// phase correction diag(r_ii / |r_ii|). Identical (dim, seed) gives a
/// bitwise identical matrix.
Matrix haar_unitary(int dim, std::uint64_t seed);

/// n independent Haar members from per-index derived seeds. The symmetric
/// variant (even n) draws n/2 members and appends their exact adjoints.
UnitaryTuple random_tuple(int n, int dim, std::uint64_t seed,
                          bool symmetric = false);

}  // namespace qexp
