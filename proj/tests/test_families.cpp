#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zkwedge/decomposer.hpp"
#include "zkwedge/error.hpp"
#include "zkwedge/families.hpp"
#include "zkwedge/hochster.hpp"

using namespace zkw;
using support::complex_of;

namespace {

VertexSet S(std::initializer_list<int> v) { return vfrom(std::vector<int>(v)); }

SphereWedge spheres(std::initializer_list<std::pair<int, std::uint64_t>> dims) {
  SphereWedge out;
  for (auto [d, c] : dims) out.add(d, c);
  return out;
}

}  // namespace

TEST_CASE("glue two triangles along an edge") {
  auto tri = family_from_shifted(SimplicialComplex::skeleton(3, 3));
  auto g = op_glue(tri, tri, {2, 3}, {1, 2});
  SymbolicWedge expect;
  expect.add(1, S({1, 4}));
  CHECK(g.wedge == expect);
  CHECK(g.level == 0);
  CHECK(g.complex == complex_of(4, {{1, 2, 3}, {2, 3, 4}}));
  CHECK(check_against_oracle(g).zero_level_plausible());
}

TEST_CASE("glue along the empty face is the disjoint union") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    auto a = family_from_shifted(support::random_shifted(2 + i % 3, rng));
    auto b = family_from_shifted(support::random_shifted(1 + i % 3, rng));
    auto u = op_disjoint_union(a, b), g = op_glue(a, b, {}, {});
    CHECK(u.wedge == g.wedge);
    CHECK(u.complex == g.complex);
  }
}

TEST_CASE("gluing a face into a complex that contains it") {
  auto k = family_from_shifted(complex_of(3, {{1, 2}, {1, 3}}));
  auto face = family_from_shifted(complex_of(2, {{1, 2}}));
  auto g = op_glue(k, face, {1, 2}, {1, 2});
  CHECK(realize(g.wedge) == realize(k.wedge));
}

TEST_CASE("disjoint union examples") {
  auto edge = family_from_shifted(complex_of(2, {{1, 2}}));
  auto point = family_from_shifted(complex_of(1, {{1}}));
  auto u = op_disjoint_union(edge, point);
  CHECK(realize(u.wedge) == spheres({{3, 2}, {4, 1}}));
  CHECK(u.wedge == torus_join_torus(S({1, 2}), S({3})));
  CHECK(realize(op_disjoint_union(point, point).wedge) == spheres({{3, 1}}));
  auto nothing = FamilyElement::from_wedge(0, SimplicialComplex(), {});
  auto same = op_disjoint_union(edge, nothing);
  CHECK(same.complex == edge.complex);
  CHECK(same.wedge == edge.wedge);
}

TEST_CASE("join examples") {
  auto pair = family_from_shifted(complex_of(2, {{1}, {2}}));
  auto cyc = op_join(pair, pair);
  CHECK(cyc.level == 1);
  CHECK(cyc.complex == complex_of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(cyc.spheres == spheres({{3, 2}, {6, 1}}));
  CHECK(check_against_oracle(cyc).poincare_match);

  auto simplex = family_from_shifted(SimplicialComplex::skeleton(3, 3));
  auto j = op_join(pair, simplex);
  CHECK(j.spheres == pair.spheres);
  CHECK(j.level == 1);

  auto point = family_from_shifted(complex_of(1, {{1}}));
  auto cone = op_join(point, pair);
  CHECK(cone.spheres == spheres({{3, 1}}));
  CHECK(check_against_oracle(cone).poincare_match);

  auto lifted = op_join(cyc, pair);
  CHECK(lifted.level == 2);
  CHECK_FALSE(FamilyElement::from_spheres(1, cyc.complex, cyc.spheres).symbolic);
  auto mixed = op_join(FamilyElement::from_spheres(1, cyc.complex, cyc.spheres), pair);
  CHECK(mixed.spheres == lifted.spheres);
  CHECK(check_against_oracle(mixed).poincare_match);
}

TEST_CASE("families agree with the oracle and with the decomposer") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    auto k1 = support::random_shifted(size(rng), rng), k2 = support::random_shifted(size(rng), rng);
    auto e1 = family_from_shifted(k1), e2 = family_from_shifted(k2);
    auto u = op_disjoint_union(e1, e2);
    CHECK(check_against_oracle(u).poincare_match);
    // glue along the first vertex of each
    auto g = op_glue(e1, e2, {1}, {1});
    CHECK(check_against_oracle(g).poincare_match);
    CHECK(g.level == 0);
    auto v = g.complex.is_shifted(ShiftMode::Search);
    if (v.shifted) CHECK(realize(family_from_shifted(g.complex).wedge) == realize(g.wedge));
    auto j = op_join(e1, e2);
    CHECK(check_against_oracle(j).poincare_match);
    CHECK(j.level == 1);
  }
}

TEST_CASE("non-shifted input is refused") {
  CHECK_THROWS_AS(family_from_shifted(complex_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})), Error);
}
