#include "qexp/tuple.hpp"

#include <stdexcept>
#include <string>

namespace qexp {

UnitaryTuple make_unitary_tuple(std::vector<Matrix> matrices, bool symmetric,
                                double tol) {
  if (matrices.empty()) throw std::invalid_argument("tuple: empty matrix list");
  const Eigen::Index dim = matrices[0].rows();
  if (dim < 1) throw std::invalid_argument("tuple: dimension must be positive");
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    const Matrix& m = matrices[j];
    const std::string at = "tuple: matrices[" + std::to_string(j) + "]";
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument(at + " has mismatched shape");
    if (!all_finite(m)) throw std::invalid_argument(at + " has non-finite entries");
    if (unitarity_residual(m) > tol)
      throw std::invalid_argument(at + " is not unitary within tolerance");
  }
  if (symmetric && !adjoint_closed(matrices, tol))
    throw std::invalid_argument("tuple: symmetric flag set but the multiset is not adjoint-closed");
  UnitaryTuple u;
  u.n = static_cast<int>(matrices.size());
  u.dim = static_cast<int>(dim);
  u.symmetric = symmetric;
  u.matrices = std::move(matrices);
  return u;
}

double tuple_unitarity_residual(const UnitaryTuple& u) {
  double worst = 0.0;
  for (const Matrix& m : u.matrices) worst = std::max(worst, unitarity_residual(m));
  return worst;
}

bool adjoint_closed(const std::vector<Matrix>& matrices, double tol) {
  for (const Matrix& m : matrices) {
    const Matrix adj = m.adjoint();
    bool found = false;
    for (const Matrix& c : matrices) {
      if (c.rows() == adj.rows() && (c - adj).norm() <= tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

UnitaryTuple direct_sum(const UnitaryTuple& a, const UnitaryTuple& b) {
  if (a.n != b.n) throw std::invalid_argument("direct_sum: tuples must have equal length");
  std::vector<Matrix> mats;
  mats.reserve(a.n);
  const int d = a.dim + b.dim;
  for (int j = 0; j < a.n; ++j) {
    Matrix m = Matrix::Zero(d, d);
    m.topLeftCorner(a.dim, a.dim) = a.matrices[j];
    m.bottomRightCorner(b.dim, b.dim) = b.matrices[j];
    mats.push_back(std::move(m));
  }
  const bool sym = adjoint_closed(mats);
  return make_unitary_tuple(std::move(mats), sym);
}

}  // namespace qexp
