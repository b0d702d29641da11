#pragma once

#include <vector>

#include "qexp/matrix.hpp"

namespace qexp {

/// A point x = (x_1, ..., x_n) of N x N matrices in the Hilbert space with
/// ||x||^2 = (nN)^-1 sum_j tr(x_j^* x_j). Unitary members give unit points.
struct TuplePoint {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> mats;
};

/// Wraps generator images as a point; inputs must be square, of equal size
/// and unitary within tol.
TuplePoint tuple_point(const std::vector<Matrix>& mats,
                       double tol = kUnitarityTol);

Complex point_inner(const TuplePoint& a, const TuplePoint& b);

double point_norm(const TuplePoint& a);

/// ||a - b|| in the normalized metric.
double separation_distance(const TuplePoint& a, const TuplePoint& b);

/// Natural log of the volume-argument packing bound: a sqrt(2*eps)-separated
/// set on the unit sphere of a complex nN^2-dimensional space (real
/// dimension 2nN^2) has at most (1 + 2/delta)^(2nN^2) points.
double packing_bound_log(int n, int dim, double eps);

}  // namespace qexp
