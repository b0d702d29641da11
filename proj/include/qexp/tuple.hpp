#pragma once

#include <vector>

#include "qexp/matrix.hpp"

namespace qexp {

/// An n-tuple of dim x dim unitaries. `symmetric` records that the multiset
/// of members is closed under adjoints.
struct UnitaryTuple {
  int n = 0;
  int dim = 0;
  bool symmetric = false;
  std::vector<Matrix> matrices;
};

/// Validates shapes, finiteness and unitarity (and adjoint closure when
/// `symmetric` is set) before wrapping. Throws std::invalid_argument.
UnitaryTuple make_unitary_tuple(std::vector<Matrix> matrices,
                                bool symmetric = false,
                                double tol = kUnitarityTol);

/// Largest unitarity residual over the members.
double tuple_unitarity_residual(const UnitaryTuple& u);

/// True if for every member the adjoint is also a member (within tol).
bool adjoint_closed(const std::vector<Matrix>& matrices,
                    double tol = kUnitarityTol);

/// Block-diagonal join of two tuples with equal n.
UnitaryTuple direct_sum(const UnitaryTuple& a, const UnitaryTuple& b);

}  // namespace qexp
