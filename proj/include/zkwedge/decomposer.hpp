#pragma once
// Wedge decomposition of Z_K for shifted K, by recursion on link and rest of the first vertex.

#include <vector>

#include "zkwedge/scomplex.hpp"
#include "zkwedge/wedge.hpp"

namespace zkw {

enum class StepPhase { Iteration1, Iteration2Pre, Iteration2Main };

const char* phase_name(StepPhase p);

/// One coordinate subspace adjunction. S are the product factors of the stage before, T the rest.
struct RegularStep {
  VertexSet simplex = 0;
  VertexSet S = 0;
  VertexSet T = 0;
  StepPhase phase = StepPhase::Iteration1;
};

struct StepTrace {
  RegularStep step;
  SymbolicWedge C, D, E;
  SymbolicWedge before, after;
};

/// A fibre summand Sigma^s (smash over J) tagged by the facet of K_J that carries its homology.
/// For shifted K_J with u = min J the facet avoids u and gains no face by adding u.
/// s = 0 occurs only inside the recursion, for index sets made of ghost vertices.
struct FibreUnit {
  int suspension = 0;
  VertexSet index = 0;
  VertexSet witness = 0;

  bool operator==(const FibreUnit&) const = default;
};

struct ThetaSplit {
  std::vector<FibreUnit> trivial_part;   // map to the rest fibre is null on these
  std::vector<FibreUnit> retract_part;   // these retract off the rest fibre
  std::vector<FibreUnit> cokernel_part;  // rest-fibre units not hit by the link fibre
  std::vector<StepTrace> trace;          // run from Link(1) to Star_R(2) u Link(1); empty when the link has ghosts
};

/// Steps adjoining the faces of `target` missing from `start` (plus all ground vertices):
/// edges through `apex` in increasing order, then each higher simplex through `apex` by
/// dimension and lex, preceded by its face opposite the apex when that is missing.
std::vector<RegularStep> regular_sequence(const SimplicialComplex& start, const SimplicialComplex& target, int apex);

/// Sequence from the vertex wedge to Star(1) for shifted K without ghosts.
std::vector<RegularStep> build_regular_sequence(const SimplicialComplex& k);

/// Throws NonRegularStep when D is not contained in `before`.
StepTrace construction_step(const SymbolicWedge& before, const RegularStep& step);

std::vector<StepTrace> run_sequence(const SymbolicWedge& start, const std::vector<RegularStep>& steps);

/// Tagged fibre units of Z_K for K shifted in its ground order; ghost vertices allowed.
std::vector<FibreUnit> fibre_units(const SimplicialComplex& k, bool certify = true);

ThetaSplit split_theta(const SimplicialComplex& k);

struct Decomposition {
  SymbolicWedge wedge;
  std::vector<StepTrace> trace;
};

/// K must be shifted under its ground order and free of ghost vertices.
SymbolicWedge decompose(const SimplicialComplex& k);
Decomposition decompose_traced(const SimplicialComplex& k, bool certify = true);

}  // namespace zkw
