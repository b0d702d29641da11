#pragma once

#include "qexp/tuple.hpp"

namespace qexp {

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// The 4-tuple (I, sigma_x, sigma_y, sigma_z) on C^2.
UnitaryTuple pauli_tuple();

/// n copies of the dim x dim identity.
UnitaryTuple identity_tuple(int n, int dim);

}  // namespace qexp
