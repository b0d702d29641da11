#include "qexp/matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace qexp {

Complex hs_inner(const Matrix& x, const Matrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw std::invalid_argument("hs_inner: operands must be square and of equal size");
  }
  return y.conjugate().cwiseProduct(x).sum();  // trace(y^* x)
}

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  Matrix d = u.adjoint() * u;
  d.diagonal().array() -= 1.0;
  return d.norm();
}

bool is_unitary(const Matrix& u, double tol) {
  return u.rows() == u.cols() && all_finite(u) && unitarity_residual(u) <= tol;
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

namespace {

// Hermitian involution H with H e_1 = -conj(alpha) w, alpha the phase of
// w_1; its trailing columns are an orthonormal basis of the complement of w.
template <typename Mat, typename Vec, typename Scalar>
Mat complement_impl(const Vec& w) {
  const Eigen::Index d = w.size();
  Scalar alpha;
  if constexpr (std::is_same_v<Scalar, Complex>) {
    alpha = std::abs(w(0)) > 0 ? w(0) / std::abs(w(0)) : Scalar(1);
  } else {
    alpha = w(0) >= 0 ? Scalar(1) : Scalar(-1);
  }
  Vec v = w;
  v(0) += alpha;
  const double nv2 = v.squaredNorm();
  Mat h = Mat::Identity(d, d);
  if (nv2 > 0) h -= (Scalar(2) / Scalar(nv2)) * (v * v.adjoint());
  return h.rightCols(d - 1);
}

}  // namespace

Eigen::MatrixXcd householder_complement(const Vector& w) {
  if (w.size() < 2) throw std::invalid_argument("householder_complement: dimension must be >= 2");
  return complement_impl<Eigen::MatrixXcd, Vector, Complex>(w);
}

Eigen::MatrixXd householder_complement_real(const Eigen::VectorXd& w) {
  if (w.size() < 2) throw std::invalid_argument("householder_complement: dimension must be >= 2");
  return complement_impl<Eigen::MatrixXd, Eigen::VectorXd, double>(w);
}

}  // namespace qexp
