#pragma once

#include <cstdint>
#include <vector>

namespace qexp {

/// Square bit matrix over the field with two elements. Rows are stored as
/// 64-bit masks, so k <= 64. All arithmetic is exact mod 2.
struct GF2Matrix {
  int k = 0;
  std::vector<std::uint64_t> rows;  // rows[i] bit j = entry (i, j)

  static GF2Matrix zero(int k);
  static GF2Matrix identity(int k);
  /// Single off-diagonal unit e_{ij} (0-based indices).
  static GF2Matrix unit(int k, int i, int j);
  /// Cyclic shift e_{0,1} + e_{1,2} + ... + e_{k-1,0}.
  static GF2Matrix shift(int k);

  bool get(int i, int j) const { return (rows[i] >> j) & 1u; }
  void set(int i, int j, bool v);

  bool operator==(const GF2Matrix& o) const = default;
};

GF2Matrix gf2_add(const GF2Matrix& a, const GF2Matrix& b);
GF2Matrix gf2_mul(const GF2Matrix& a, const GF2Matrix& b);
bool gf2_invertible(const GF2Matrix& a);
GF2Matrix gf2_inverse(const GF2Matrix& a);  // throws NonInvertibleGeneratorError

/// Matrix-vector product on bit vectors of length k.
std::uint64_t gf2_apply(const GF2Matrix& a, std::uint64_t v);

/// Size of the subring of M_k(F_2) generated by `gens` under addition and
/// multiplication (breadth-first closure). Supports k <= 3 where the full
/// ring has 2^(k^2) <= 512 elements. Throws std::invalid_argument on k out
/// of range or empty gens.
std::size_t ring_closure(int k, const std::vector<GF2Matrix>& gens);

}  // namespace qexp
