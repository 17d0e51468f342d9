#pragma once
// Cohomology of Z_K from full subcomplexes: H^d(Z_K) = sum over sigma of H^(d-|sigma|-1)(K_sigma).

#include <cstdint>
#include <vector>

#include "zkwedge/scomplex.hpp"
#include "zkwedge/wedge.hpp"

namespace zkw {

constexpr int kOracleMaxVertices = 20;

struct BettiEntry {
  VertexSet sigma = 0;
  int degree = 0;  // cohomological degree in Z_K
  std::uint64_t rank = 0;
  bool torsion = false;
};

/// Nonzero reduced entries, ordered by sigma (size, then lex) and degree. The unit at sigma = {} is left out.
struct BigradedBetti {
  std::vector<BettiEntry> entries;

  std::uint64_t rank(VertexSet sigma, int degree) const;
  bool torsion_free() const;
  /// Coefficient list of the reduced Poincare polynomial.
  std::vector<std::uint64_t> poincare() const;
};

/// threads == 0 picks the hardware concurrency. Output does not depend on it.
BigradedBetti bigraded_betti(const SimplicialComplex& k, unsigned threads = 1);

struct ZkProfile {
  std::vector<std::uint64_t> poincare;
  bool torsion_free = true;
  bool has_candidate = false;
  SphereWedge sphere_candidate;  // one S^d per unit of rank; a necessary condition only
};

ZkProfile zk_profile(const SimplicialComplex& k, unsigned threads = 1);
ZkProfile zk_profile(const BigradedBetti& betti);

}  // namespace zkw
