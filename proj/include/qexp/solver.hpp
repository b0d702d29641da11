#pragma once

#include <cstdint>
#include <functional>

#include "qexp/matrix.hpp"

namespace qexp {

struct SolverOptions {
  double convergence_tol = 1e-9;
  long max_iterations = 100000;
  /// Operating dimensions up to this use the dense eigensolver / SVD path.
  int dense_threshold = 256;
  std::uint64_t seed = 1;
};

/// Hermitian operator on C^dim given as y = op(x); project is an orthogonal
/// projection applied after every application to kill drift out of the
/// working subspace (pass nullptr for none).
using LinOp = std::function<void(const Vector&, Vector&)>;
using Projector = std::function<void(Vector&)>;

struct IterResult {
  double value = 0.0;    ///< top eigenvalue estimate
  long iterations = 0;   ///< operator applications
  double residual = 0.0; ///< ||op(x) - value*x|| at the returned vector
};

/// Largest eigenvalue of a Hermitian positive-semidefinite operator by
/// power iteration with a deterministic seeded start, re-randomized on
/// stagnation, with a Lanczos refinement fallback when plain power
/// iteration cannot reach the tolerance within the budget.
/// Throws NoConvergenceError if the residual stays above tolerance.
IterResult iterative_top(const LinOp& op, int dim, const Projector& project,
                         const SolverOptions& opts);

}  // namespace qexp
