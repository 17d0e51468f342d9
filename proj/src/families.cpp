#include "zkwedge/families.hpp"

#include <algorithm>

#include "zkwedge/decomposer.hpp"
#include "zkwedge/error.hpp"
#include "zkwedge/hochster.hpp"

namespace zkw {

FamilyElement FamilyElement::from_wedge(int level, SimplicialComplex k, SymbolicWedge w) {
  FamilyElement e;
  e.level = level;
  e.complex = std::move(k);
  e.symbolic = true;
  e.spheres = realize(w, 1);
  e.wedge = std::move(w);
  return e;
}

FamilyElement FamilyElement::from_spheres(int level, SimplicialComplex k, SphereWedge s) {
  FamilyElement e;
  e.level = level;
  e.complex = std::move(k);
  e.spheres = std::move(s);
  return e;
}

FamilyElement family_from_shifted(const SimplicialComplex& k) {
  ShiftVerdict v = k.is_shifted(ShiftMode::Search);
  if (!v.shifted)
    throw Error(ErrorKind::NotShifted, "complex is not shifted under any vertex order");
  SymbolicWedge w = decompose(k.relabel(v.order));
  std::vector<int> back(v.order.size() + 1, 0);
  for (std::size_t i = 0; i < v.order.size(); ++i) back[i + 1] = v.order[i];
  return FamilyElement::from_wedge(0, k, w.relabel(back));
}

namespace {

SphereWedge torus_join_spheres(int left, int right) {
  SphereWedge out;
  for (int u = 1; u <= left; ++u)
    for (int v = 1; v <= right; ++v) out.add(1 + u + v, binomial(left, u) * binomial(right, v));
  return out;
}

}  // namespace

FamilyElement op_glue(const FamilyElement& e1, const FamilyElement& e2, const std::vector<int>& face1,
                      const std::vector<int>& face2) {
  GlueLayout lay = glue_layout(e1.complex, e2.complex, face1, face2);
  SimplicialComplex k = combine(CombineKind::Glue, e1.complex, e2.complex, face1, face2);
  const int level = std::max(e1.level, e2.level);
  if (e1.symbolic && e2.symbolic) {
    SymbolicWedge w1 = e1.wedge.relabel(lay.map1), w2 = e2.wedge.relabel(lay.map2);
    SymbolicWedge w = torus_join_torus(lay.left_only, lay.right_only);
    w.add(half_smash_left(lay.left_only, w2));
    w.add(half_smash_right(w1, lay.right_only));
    return FamilyElement::from_wedge(level, std::move(k), std::move(w));
  }
  const int l = vcount(lay.left_only), r = vcount(lay.right_only);
  SphereWedge s = torus_join_spheres(l, r);
  s = wedge(s, half_smash_torus(e2.spheres, l));
  s = wedge(s, half_smash_torus(e1.spheres, r));
  return FamilyElement::from_spheres(level, std::move(k), std::move(s));
}

FamilyElement op_disjoint_union(const FamilyElement& e1, const FamilyElement& e2) { return op_glue(e1, e2, {}, {}); }

FamilyElement op_join(const FamilyElement& e1, const FamilyElement& e2) {
  GlueLayout lay = join_layout(e1.complex, e2.complex);
  SimplicialComplex k = combine(CombineKind::Join, e1.complex, e2.complex);
  const int level = std::max(e1.level, e2.level) + 1;
  if (e1.symbolic && e2.symbolic) {
    SymbolicWedge w1 = e1.wedge.relabel(lay.map1), w2 = e2.wedge.relabel(lay.map2);
    SymbolicWedge w = wedge(w1, w2);
    w.add(smash(w1, w2));
    return FamilyElement::from_wedge(level, std::move(k), std::move(w));
  }
  SphereWedge s = wedge(e1.spheres, e2.spheres);
  s = wedge(s, smash(e1.spheres, e2.spheres));
  return FamilyElement::from_spheres(level, std::move(k), std::move(s));
}

OracleAgreement check_against_oracle(const FamilyElement& e, unsigned threads) {
  ZkProfile p = zk_profile(e.complex, threads);
  OracleAgreement a;
  a.torsion_free = p.torsion_free;
  a.poincare_match = p.poincare == e.spheres.poincare();
  return a;
}

}  // namespace zkw
