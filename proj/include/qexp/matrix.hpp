#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qexp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A square matrix regarded as a vector in Hilbert-Schmidt space.
using HSVector = Matrix;

/// Default tolerance for "is unitary" checks (Frobenius norm of U*U - I).
inline constexpr double kUnitarityTol = 1e-10;

/// Singular values below this count as zero in rank / nullspace decisions.
inline constexpr double kFixedTol = 1e-8;

/// Hilbert-Schmidt inner product trace(y^* x). Throws on shape mismatch.
Complex hs_inner(const Matrix& x, const Matrix& y);

/// Frobenius norm of u^* u - I.
double unitarity_residual(const Matrix& u);

bool is_unitary(const Matrix& u, double tol = kUnitarityTol);

/// True if every entry is finite.
bool all_finite(const Matrix& m);

/// Orthonormal basis of the orthogonal complement of a unit vector w,
/// as the trailing dim-1 columns of the Householder reflection mapping
/// e_1 into the line of w. Deterministic.
Eigen::MatrixXcd householder_complement(const Vector& w);
Eigen::MatrixXd householder_complement_real(const Eigen::VectorXd& w);

}  // namespace qexp
