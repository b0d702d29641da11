#include "qexp/superop.hpp"

#include <stdexcept>

namespace qexp {

namespace {

void check_pair(const UnitaryTuple& u, const UnitaryTuple& v, const Matrix* x) {
  if (u.n != v.n) throw std::invalid_argument("superop: tuple lengths differ");
  if (u.dim != v.dim) throw std::invalid_argument("superop: tuple dimensions differ");
  if (x && (x->rows() != u.dim || x->cols() != u.dim))
    throw std::invalid_argument("superop: operand shape does not match tuple dimension");
}

}  // namespace

Matrix apply_superop(const UnitaryTuple& u, const UnitaryTuple& v, const Matrix& x) {
  check_pair(u, v, &x);
  Matrix acc = Matrix::Zero(u.dim, u.dim);
  for (int j = 0; j < u.n; ++j) acc.noalias() += u.matrices[j] * x * v.matrices[j].adjoint();
  return acc;
}

Matrix apply_superop_adjoint(const UnitaryTuple& u, const UnitaryTuple& v, const Matrix& x) {
  check_pair(u, v, &x);
  Matrix acc = Matrix::Zero(u.dim, u.dim);
  for (int j = 0; j < u.n; ++j) acc.noalias() += u.matrices[j].adjoint() * x * v.matrices[j];
  return acc;
}

Matrix dense_superop_matrix(const UnitaryTuple& u, const UnitaryTuple& v) {
  check_pair(u, v, nullptr);
  const int d = u.dim;
  Matrix m = Matrix::Zero(d * d, d * d);
  // row-major vec: entry ((i,j),(k,l)) = sum_t u_t(i,k) * conj(v_t(j,l))
  for (int t = 0; t < u.n; ++t) {
    const Matrix& a = u.matrices[t];
    const Matrix& b = v.matrices[t];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            m(i * d + j, k * d + l) += a(i, k) * std::conj(b(j, l));
  }
  return m;
}

}  // namespace qexp
