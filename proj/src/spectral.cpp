#include "qexp/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "qexp/errors.hpp"

namespace qexp {

namespace {

constexpr int kMaxRepDimension = 2048;

SpectralReport make_report(double raw_lambda, Method method, long iterations,
                           double residual, bool clamped = false) {
  SpectralReport r;
  r.lambda = std::clamp(raw_lambda, -1.0, 1.0);
  r.epsilon = 1.0 - r.lambda;
  r.method = method;
  r.iterations = iterations;
  r.residual = residual;
  r.clamped = clamped;
  return r;
}

double top_eig_compressed(const Matrix& hermitian, const Matrix& basis) {
  const Matrix c = basis.adjoint() * hermitian * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> es(c, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Orthonormal basis of the trace-zero subspace in the row-major
// vectorization (column index i*d+i carries the diagonal either way).
Matrix traceless_basis(int d) {
  Vector w = Vector::Zero(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) w(i * d + i) = a;
  return householder_complement(w);
}

void project_traceless(Vector& x, int d) {
  Complex tr = 0.0;
  for (int i = 0; i < d; ++i) tr += x(i * d + i);
  tr /= static_cast<double>(d);
  for (int i = 0; i < d; ++i) x(i * d + i) -= tr;
}

void check_rep(const std::vector<Matrix>& images, const char* who) {
  if (images.empty()) throw std::invalid_argument(std::string(who) + ": empty generator list");
  const Eigen::Index d = images[0].rows();
  for (const Matrix& m : images) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument(std::string(who) + ": images have mixed dimensions");
    if (!is_unitary(m))
      throw std::invalid_argument(std::string(who) + ": image is not unitary within tolerance");
  }
  if (d > kMaxRepDimension)
    throw std::invalid_argument(std::string(who) + ": dimension exceeds the supported maximum");
}

}  // namespace

SpectralReport lambda_gap(const UnitaryTuple& u, const SolverOptions& opts) {
  if (u.dim == 1)
    throw DegenerateDimensionError(
        "lambda_gap: dim = 1 has no trace-zero directions (lambda(u) is undefined)");
  const int d = u.dim;
  const int big = d * d;
  const double n = static_cast<double>(u.n);

  if (big <= opts.dense_threshold) {
    const Matrix m = dense_superop_matrix(u, u);
    const Matrix h = 0.5 * (m + m.adjoint());
    const double top = top_eig_compressed(h, traceless_basis(d));
    return make_report(top / n, Method::dense, 0, 0.0);
  }

  // Matrix-free power iteration on (T + T*)/(2n) + I, spectrum in [0, 2].
  LinOp op = [&](const Vector& x, Vector& y) {
    const Eigen::Map<const Matrix> xm(x.data(), d, d);
    Matrix xx = xm;
    Matrix t = apply_superop(u, u, xx) + apply_superop_adjoint(u, u, xx);
    t *= 1.0 / (2.0 * n);
    t += xx;
    y = Eigen::Map<const Vector>(t.data(), big);
  };
  Projector proj = [d](Vector& x) { project_traceless(x, d); };
  IterResult res = iterative_top(op, big, proj, opts);
  return make_report(res.value - 1.0, Method::iterative, res.iterations, res.residual);
}

SpectralReport rep_gap(const std::vector<Matrix>& images, const SolverOptions& opts) {
  check_rep(images, "rep_gap");
  const int d = static_cast<int>(images[0].rows());
  const int n = static_cast<int>(images.size());

  // Joint fixed subspace: nullspace of the stacked (pi(s) - I) system.
  Matrix stacked(static_cast<Eigen::Index>(n) * d, d);
  for (int s = 0; s < n; ++s) {
    stacked.middleRows(static_cast<Eigen::Index>(s) * d, d) =
        images[s] - Matrix::Identity(d, d);
  }
  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) >= kFixedTol) ++rank;
  const int inv_dim = d - rank;

  if (inv_dim == d) {
    // Trivial representation: the supremum ranges over an empty set.
    return make_report(-1.0, Method::dense, 0, 0.0, true);
  }

  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& m : images) sum += m;

  if (d <= opts.dense_threshold) {
    const Matrix h = 0.5 * (sum + sum.adjoint());
    const Matrix basis = svd.matrixV().leftCols(rank);
    return make_report(top_eig_compressed(h, basis) / n, Method::dense, 0, 0.0);
  }

  const Matrix null_basis = svd.matrixV().rightCols(inv_dim);
  LinOp op = [&](const Vector& x, Vector& y) {
    y = (sum * x + sum.adjoint() * x) * (1.0 / (2.0 * n));
    y += x;
  };
  Projector proj = [&](Vector& x) { x -= null_basis * (null_basis.adjoint() * x); };
  IterResult res = iterative_top(op, d, proj, opts);
  return make_report(res.value - 1.0, Method::iterative, res.iterations, res.residual);
}

double pair_norm(const UnitaryTuple& u, const UnitaryTuple& v, const SolverOptions& opts) {
  const int d = u.dim;
  const int big = d * d;
  if (big <= opts.dense_threshold) {
    const Matrix m = dense_superop_matrix(u, v);
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
  }
  LinOp op = [&](const Vector& x, Vector& y) {
    const Eigen::Map<const Matrix> xm(x.data(), d, d);
    Matrix xx = xm;
    Matrix t = apply_superop_adjoint(u, v, apply_superop(u, v, xx));
    y = Eigen::Map<const Vector>(t.data(), big);
  };
  IterResult res = iterative_top(op, big, nullptr, opts);
  return std::sqrt(std::max(0.0, res.value));
}

double self_norm_traceless(const UnitaryTuple& u, const SolverOptions& opts) {
  if (u.dim == 1)
    throw DegenerateDimensionError("self_norm_traceless: dim = 1 has no trace-zero directions");
  const int d = u.dim;
  const int big = d * d;
  if (big <= opts.dense_threshold) {
    const Matrix basis = traceless_basis(d);
    const Matrix m = basis.adjoint() * dense_superop_matrix(u, u) * basis;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
  }
  LinOp op = [&](const Vector& x, Vector& y) {
    Vector px = x;
    project_traceless(px, d);
    const Eigen::Map<const Matrix> xm(px.data(), d, d);
    Matrix xx = xm;
    Matrix fwd = apply_superop(u, u, xx);
    Vector mid = Eigen::Map<const Vector>(fwd.data(), big);
    project_traceless(mid, d);
    const Eigen::Map<const Matrix> mm(mid.data(), d, d);
    Matrix back = apply_superop_adjoint(u, u, Matrix(mm));
    y = Eigen::Map<const Vector>(back.data(), big);
  };
  Projector proj = [d](Vector& x) { project_traceless(x, d); };
  IterResult res = iterative_top(op, big, proj, opts);
  return std::sqrt(std::max(0.0, res.value));
}

int intertwiner_dim(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("intertwiner_dim: generator lists differ in length");
  if (a.empty()) throw std::invalid_argument("intertwiner_dim: empty generator lists");
  const int da = static_cast<int>(a[0].rows());
  const int db = static_cast<int>(b[0].rows());
  for (const Matrix& m : a)
    if (m.rows() != da || m.cols() != da)
      throw std::invalid_argument("intertwiner_dim: mixed dimensions on the left");
  for (const Matrix& m : b)
    if (m.rows() != db || m.cols() != db)
      throw std::invalid_argument("intertwiner_dim: mixed dimensions on the right");

  const int n = static_cast<int>(a.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(da) * db;
  if (cols > 1600)
    throw std::invalid_argument("intertwiner_dim: system too large for the dense nullspace route");
  Matrix stacked = Matrix::Zero(static_cast<Eigen::Index>(n) * cols, cols);
  // Row-major vec of x (da x db): a_j x - x b_j = (kron(a_j, I) - kron(I, b_j^T)) vec(x).
  for (int t = 0; t < n; ++t) {
    const Eigen::Index r0 = static_cast<Eigen::Index>(t) * cols;
    for (int i = 0; i < da; ++i)
      for (int l = 0; l < db; ++l) {
        const Eigen::Index row = r0 + static_cast<Eigen::Index>(i) * db + l;
        for (int k = 0; k < da; ++k)
          stacked(row, static_cast<Eigen::Index>(k) * db + l) += a[t](i, k);
        for (int k = 0; k < db; ++k)
          stacked(row, static_cast<Eigen::Index>(i) * db + k) -= b[t](k, l);
      }
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  int null_dim = static_cast<int>(cols);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) >= kFixedTol) --null_dim;
  return null_dim;
}

int intertwiner_dim(const UnitaryTuple& u, const UnitaryTuple& v) {
  if (u.n != v.n) throw std::invalid_argument("intertwiner_dim: tuple lengths differ");
  return intertwiner_dim(u.matrices, v.matrices);
}

int commutant_dim(const UnitaryTuple& u) { return intertwiner_dim(u, u); }

}  // namespace qexp
