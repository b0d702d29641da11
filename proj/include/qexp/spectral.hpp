#pragma once

#include <vector>

#include "qexp/solver.hpp"
#include "qexp/superop.hpp"
#include "qexp/tuple.hpp"

namespace qexp {

enum class Method { dense, iterative };

/// Result of a spectral gap computation: lambda is the normalized top value
/// in [-1, 1], epsilon = 1 - lambda.
struct SpectralReport {
  double lambda = 0.0;
  double epsilon = 0.0;
  Method method = Method::dense;
  long iterations = 0;
  double residual = 0.0;
  /// Set when the deflated subspace was the whole space and lambda was
  /// clamped to -1 (trivial representation case). Not serialized.
  bool clamped = false;
};

/// lambda(u): top eigenvalue, divided by n, of the Hermitian part of
/// x -> sum_j u_j x u_j^* restricted to the trace-zero subspace.
/// Throws DegenerateDimensionError when u.dim == 1.
SpectralReport lambda_gap(const UnitaryTuple& u,
                          const SolverOptions& opts = {});

/// lambda(pi, S) for generator images pi(s): deflates the joint fixed
/// subspace (nullspace of the stacked (pi(s) - I) system, singular values
/// below kFixedTol) and takes the top eigenvalue of the Hermitian part of
/// sum_s pi(s) on the complement, divided by n. A trivial representation
/// (fixed space = everything) reports lambda = -1 with the clamped flag.
SpectralReport rep_gap(const std::vector<Matrix>& images,
                       const SolverOptions& opts = {});

/// Operator norm of x -> sum_j u_j x v_j^* on Hilbert-Schmidt space.
double pair_norm(const UnitaryTuple& u, const UnitaryTuple& v,
                 const SolverOptions& opts = {});

/// Operator norm of the same map restricted to the trace-zero subspace;
/// the two-sided gap certificate for symmetric tuples.
double self_norm_traceless(const UnitaryTuple& u,
                           const SolverOptions& opts = {});

/// Dimension of { x : a_j x = x b_j for all j } via singular values of the
/// stacked linear system (threshold kFixedTol).
int intertwiner_dim(const std::vector<Matrix>& a,
                    const std::vector<Matrix>& b);
int intertwiner_dim(const UnitaryTuple& u, const UnitaryTuple& v);

/// intertwiner_dim(u, u); always >= 1.
int commutant_dim(const UnitaryTuple& u);

}  // namespace qexp
