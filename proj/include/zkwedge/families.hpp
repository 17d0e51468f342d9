#pragma once
// Filtration elements (K, virtual sphere data of Z_K, suspension level t) and the
// three operations that preserve them: disjoint union, gluing along a face, join.

#include <vector>

#include "zkwedge/scomplex.hpp"
#include "zkwedge/wedge.hpp"

namespace zkw {

struct FamilyElement {
  int level = 0;  // Sigma^level Z_K is a wedge of spheres
  SimplicialComplex complex;
  bool symbolic = false;
  SymbolicWedge wedge;  // meaningful when symbolic
  SphereWedge spheres;  // virtual dimensions of Z_K, always filled

  static FamilyElement from_wedge(int level, SimplicialComplex k, SymbolicWedge w);
  static FamilyElement from_spheres(int level, SimplicialComplex k, SphereWedge s);
};

/// Level-0 element of a complex that is shifted under some vertex order (search, n <= 10).
/// Summand indices are reported in the complex's own labels.
FamilyElement family_from_shifted(const SimplicialComplex& k);

FamilyElement op_glue(const FamilyElement& e1, const FamilyElement& e2, const std::vector<int>& face1,
                      const std::vector<int>& face2);
FamilyElement op_disjoint_union(const FamilyElement& e1, const FamilyElement& e2);
FamilyElement op_join(const FamilyElement& e1, const FamilyElement& e2);

struct OracleAgreement {
  bool poincare_match = false;
  bool torsion_free = false;
  /// Both hold; evidence for level 0, not a proof.
  bool zero_level_plausible() const { return poincare_match && torsion_free; }
};

OracleAgreement check_against_oracle(const FamilyElement& e, unsigned threads = 1);

}  // namespace zkw
