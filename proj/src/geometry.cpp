#include "qexp/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace qexp {

TuplePoint tuple_point(const std::vector<Matrix>& mats, double tol) {
  if (mats.empty()) throw std::invalid_argument("tuple_point: empty tuple");
  const Eigen::Index d = mats[0].rows();
  for (const Matrix& m : mats) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("tuple_point: members must be square of equal size");
    if (!is_unitary(m, tol))
      throw std::invalid_argument("tuple_point: members must be unitary within tolerance");
  }
  TuplePoint p;
  p.n = static_cast<int>(mats.size());
  p.dim = static_cast<int>(d);
  p.mats = mats;
  return p;
}

Complex point_inner(const TuplePoint& a, const TuplePoint& b) {
  if (a.n != b.n || a.dim != b.dim)
    throw std::invalid_argument("point_inner: points live in different spaces");
  Complex acc = 0.0;
  for (int j = 0; j < a.n; ++j) acc += hs_inner(a.mats[j], b.mats[j]);
  return acc / static_cast<double>(a.n * a.dim);
}

double point_norm(const TuplePoint& a) {
  return std::sqrt(std::max(0.0, point_inner(a, a).real()));
}

double separation_distance(const TuplePoint& a, const TuplePoint& b) {
  if (a.n != b.n || a.dim != b.dim)
    throw std::invalid_argument("separation_distance: points live in different spaces");
  double acc = 0.0;
  for (int j = 0; j < a.n; ++j) acc += (a.mats[j] - b.mats[j]).squaredNorm();
  return std::sqrt(acc / static_cast<double>(a.n * a.dim));
}

double packing_bound_log(int n, int dim, double eps) {
  if (n < 1 || dim < 1) throw std::invalid_argument("packing_bound_log: n and dim must be positive");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("packing_bound_log: eps must lie in (0, 1)");
  const double delta = std::sqrt(2.0 * eps);
  const double real_dim = 2.0 * n * static_cast<double>(dim) * dim;
  return real_dim * std::log1p(2.0 / delta);
}

}  // namespace qexp
