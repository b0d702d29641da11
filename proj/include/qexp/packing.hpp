#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qexp/geometry.hpp"
#include "qexp/sampler.hpp"
#include "qexp/spectral.hpp"

namespace qexp {

/// A certified eps-separated family of eps-quantum expanders together with
/// its volume-bound comparison.
struct PackingResult {
  int n = 0;
  int dim = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  bool seeded = false;      // kept_seeds meaningful (candidates were drawn)
  bool symmetric = false;   // candidates were symmetric tuples
  long candidates_examined = 0;
  std::vector<std::size_t> kept_indices;    // into the candidate stream
  std::vector<std::uint64_t> kept_seeds;    // per kept tuple, when seeded
  std::vector<UnitaryTuple> kept;
  std::vector<double> gap_certificates;     // epsilon per kept tuple
  std::vector<std::vector<double>> pair_certificates;  // pair_norm matrix
  std::vector<bool> marginal;  // certificate within tol of a threshold
  double log_count = 0.0;      // ln(kept count), 0 for an empty packing
  double log_volume_bound = 0.0;
  SolverOptions options;
};

/// Greedy admission over an explicit candidate list, in index order: a
/// candidate is kept iff its gap certificate is >= eps and its pair norm
/// against every kept tuple is <= n(1-eps). For symmetric tuples the gap
/// certificate is the two-sided 1 - |norm on the trace-zero subspace|/n.
PackingResult greedy_pack_candidates(const std::vector<UnitaryTuple>& candidates,
                                     double eps, const SolverOptions& opts = {},
                                     int threads = 1);

/// Seeded stream of num_candidates Haar tuples (per-candidate seeds derived
/// from `seed`), then greedy admission. Deterministic for fixed inputs and
/// any thread count.
PackingResult greedy_pack(int n, int dim, double eps, long num_candidates,
                          std::uint64_t seed, const SolverOptions& opts = {},
                          bool symmetric = false, int threads = 1);

/// Block-diagonal tuple over a homogeneous nonempty family.
UnitaryTuple assemble_direct_sum(const std::vector<UnitaryTuple>& family);

struct MemberCertificate {
  double epsilon = 0.0;
  int commutant_dim = 0;
  bool marginal = false;
};

struct PairCertificate {
  std::size_t i = 0, j = 0;
  double pair_norm = 0.0;
  int intertwiner_dim = 0;
  bool marginal = false;
};

/// Violations are report content, not errors.
struct CertificationReport {
  int n = 0;
  int dim = 0;
  double eps = 0.0;
  std::vector<MemberCertificate> members;
  std::vector<PairCertificate> pairs;
  std::vector<std::string> violations;
};

/// Re-verifies a family as in the block-diagonal construction: commutant
/// dimension 1 per member (irreducibility), pair norms <= n(1-eps)+tol and
/// intertwiner dimension 0 per pair (inequivalence).
CertificationReport certify_family(const std::vector<UnitaryTuple>& family,
                                   double eps, const SolverOptions& opts = {});

}  // namespace qexp
