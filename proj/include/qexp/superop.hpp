#pragma once

#include "qexp/tuple.hpp"

namespace qexp {

/// x -> sum_j u_j x v_j^*, applied matrix-free (never forms the N^2 x N^2
/// matrix). Throws on length or dimension mismatch.
Matrix apply_superop(const UnitaryTuple& u, const UnitaryTuple& v,
                     const Matrix& x);

/// Hilbert-Schmidt adjoint of apply_superop: y -> sum_j u_j^* y v_j.
Matrix apply_superop_adjoint(const UnitaryTuple& u, const UnitaryTuple& v,
                             const Matrix& x);

/// Dense N^2 x N^2 matrix of x -> sum_j u_j x v_j^* in the row-major
/// vectorization basis, i.e. sum_j kron(u_j, conj(v_j)). Used by the dense
/// solver paths; intended for N^2 up to the dense threshold.
Matrix dense_superop_matrix(const UnitaryTuple& u, const UnitaryTuple& v);

}  // namespace qexp
