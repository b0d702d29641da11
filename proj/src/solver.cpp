#include "qexp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qexp/errors.hpp"
#include "qexp/rng.hpp"

namespace qexp {

namespace {

constexpr long kStagnationWindow = 500;
constexpr int kMaxRestarts = 2;
constexpr double kAnnihilated = 1e-200;

Vector random_unit(int dim, Rng& rng, const Projector& project) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.cgauss();
    if (project) project(v);
    const double nrm = v.norm();
    if (nrm > kAnnihilated) return v / nrm;
  }
  throw std::invalid_argument("iterative_top: projector annihilates random vectors");
}

struct LanczosOutcome {
  bool converged = false;
  bool exhausted = false;  // Krylov space ran out before reaching tolerance
  double value = 0.0;
  double residual = 0.0;
};

LanczosOutcome lanczos_top(const LinOp& op, int dim, const Projector& project,
                           Rng& rng, long max_steps, double tol, long& used) {
  LanczosOutcome out;
  std::vector<Vector> basis;
  std::vector<double> alpha, beta;
  basis.push_back(random_unit(dim, rng, project));

  Vector w(dim), ritz(dim), applied(dim);
  const long m = std::max<long>(2, max_steps);
  for (long j = 0; j < m; ++j) {
    op(basis[j], w);
    if (project) project(w);
    ++used;
    alpha.push_back(basis[j].dot(w).real());
    w -= alpha[j] * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (long i = 0; i <= j; ++i) w -= basis[i].dot(w) * basis[i];
    const double b = w.norm();

    const bool last = (j == m - 1) || b < 1e-13;
    if (last || (j + 1) % 10 == 0) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), j + 1);
      Eigen::VectorXd sub(j > 0 ? j : 0);
      for (long i = 0; i < j; ++i) sub(i) = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub);
      const long top = j;  // eigenvalues ascending
      const double est = b * std::abs(es.eigenvectors()(j, top));
      if (est <= tol || last) {
        ritz.setZero(dim);
        for (long i = 0; i <= j; ++i) ritz += es.eigenvectors()(i, top) * basis[i];
        if (project) project(ritz);
        const double rn = ritz.norm();
        if (rn > kAnnihilated) {
          ritz /= rn;
          op(ritz, applied);
          if (project) project(applied);
          ++used;
          const double mu = ritz.dot(applied).real();
          const double res = (applied - mu * ritz).norm();
          if (res <= tol) return {true, false, mu, res};
          out.value = mu;
          out.residual = res;
        }
        if (last) {
          out.exhausted = b < 1e-13;
          return out;
        }
      }
    }
    if (b < 1e-13) {
      out.exhausted = true;
      return out;
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  return out;
}

}  // namespace

IterResult iterative_top(const LinOp& op, int dim, const Projector& project,
                         const SolverOptions& opts) {
  if (dim < 1) throw std::invalid_argument("iterative_top: empty space");
  const double tol = opts.convergence_tol;
  Rng rng(mix64(opts.seed) ^ 0x9E3779B97F4A7C15ull);

  Vector x = random_unit(dim, rng, project);
  Vector ax(dim);
  long used = 0;
  int restarts = 0;
  int annihilated_seen = 0;
  double best_res = std::numeric_limits<double>::infinity();
  double best_mu = 0.0;
  double window_res = std::numeric_limits<double>::infinity();
  long next_check = kStagnationWindow;

  // Power iteration; callers arrange a PSD operator so the largest
  // eigenvalue is also the largest in magnitude.
  while (used < opts.max_iterations) {
    op(x, ax);
    if (project) project(ax);
    ++used;
    const double mu = x.dot(ax).real();
    const double res = (ax - mu * x).norm();
    if (res < best_res) {
      best_res = res;
      best_mu = mu;
    }
    if (res <= tol) return {mu, used, res};

    const double nrm = ax.norm();
    if (nrm < kAnnihilated) {
      // op (numerically) kills this vector; for a PSD operator a repeat on a
      // fresh start pins the top eigenvalue at zero.
      if (++annihilated_seen >= 2) return {0.0, used, nrm};
      x = random_unit(dim, rng, project);
      continue;
    }
    x = ax / nrm;

    if (used >= next_check) {
      next_check += kStagnationWindow;
      if (res > 0.5 * window_res) {
        if (restarts < kMaxRestarts) {
          ++restarts;
          x = random_unit(dim, rng, project);
          window_res = std::numeric_limits<double>::infinity();
          continue;
        }
        break;  // hand over to Lanczos
      }
      window_res = res;
    }
  }

  // Lanczos refinement on the same operator. Full reorthogonalization, so
  // cap the step count by a memory budget as well as the iteration budget.
  long remaining = opts.max_iterations - used;
  const long mem_cap = std::max<long>(16, (64LL << 20) / (16LL * std::max(dim, 1)));
  long steps = std::min<long>({remaining, dim + 2L, 400L, mem_cap});
  for (int attempt = 0; attempt < 2 && steps >= 2; ++attempt) {
    LanczosOutcome lz = lanczos_top(op, dim, project, rng, steps, tol, used);
    if (lz.converged) return {lz.value, used, lz.residual};
    if (lz.residual > 0 && lz.residual < best_res) {
      best_res = lz.residual;
      best_mu = lz.value;
    }
    if (!lz.exhausted) break;  // budget ran out mid-sweep; a retry won't help
    remaining = opts.max_iterations - used;
    steps = std::min<long>({remaining, dim + 2L, 400L, mem_cap});
  }

  throw NoConvergenceError(
      "iterative solver failed to reach tolerance " + std::to_string(tol) +
          " (best residual " + std::to_string(best_res) + ", value " +
          std::to_string(best_mu) + ")",
      best_res, used);
}

}  // namespace qexp
