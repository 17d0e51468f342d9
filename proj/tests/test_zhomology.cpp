#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zkwedge/error.hpp"
#include "zkwedge/zhomology.hpp"

using namespace zkw;
using support::complex_of;

namespace {

IntegerMatrix matrix(std::size_t r, std::size_t c, std::vector<int> v) {
  return IntegerMatrix(r, c, std::vector<Integer>(v.begin(), v.end()));
}

// Six-vertex minimal triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  return complex_of(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                        {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto a = smith_normal_form(matrix(2, 2, {2, 4, 6, 8}));
  CHECK(a.diagonal == std::vector<Integer>{2, 4});
  auto id = smith_normal_form(matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(id.diagonal == std::vector<Integer>{1, 1, 1});
  auto z = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(z.diagonal.empty());
  CHECK(z.rank == 0);
}

TEST_CASE("smith normal form handles entries past 64 bits") {
  Integer big = Integer(1) << 80;
  IntegerMatrix m(2, 2, {big, Integer(0), Integer(0), big * 3});
  auto r = smith_normal_form(m);
  CHECK(r.diagonal == std::vector<Integer>{big, big * 3});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(1, 6), entry(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    CHECK(s.rank == support::rational_rank(m));
    if (r == c && s.rank == r) {
      Integer prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      Integer det = support::determinant(m);
      CHECK(prod == (det < 0 ? Integer(-det) : det));
    }
  }
}

TEST_CASE("reduced homology examples") {
  auto circle = SimplicialComplex::skeleton(3, 2);
  auto h = reduced_homology(circle);
  CHECK(h.betti(1) == 1);
  CHECK(h.betti(0) == 0);
  CHECK(h.betti(-1) == 0);

  auto two = complex_of(2, {{1}, {2}});
  CHECK(reduced_homology(two).betti(0) == 1);

  auto rp2 = reduced_homology(projective_plane());
  CHECK(rp2.betti(1) == 0);
  CHECK(rp2.torsion(1) == std::vector<Integer>{2});
  CHECK(rp2.betti(2) == 0);
  CHECK_FALSE(rp2.torsion_free());

  auto empty = reduced_homology(SimplicialComplex::skeleton(3, 0));
  CHECK(empty.betti(-1) == 1);
}

TEST_CASE("cohomology dimensions over fields") {
  CHECK(cohomology_dims(SimplicialComplex::skeleton(3, 2))[2] == 1);
  auto f2 = cohomology_dims(projective_plane(), 2);
  CHECK(f2[2] == 1);
  CHECK(f2[3] == 1);
  auto f3 = cohomology_dims(projective_plane(), 3);
  CHECK(f3[2] == 0);
  for (auto d : cohomology_dims(SimplicialComplex::skeleton(4, 4))) CHECK(d == 0);
  CHECK_THROWS_AS(cohomology_dims(projective_plane(), 4), Error);
}

TEST_CASE("boundary squares to zero, Euler identity, rational rank") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = support::random_complex(2 + trial % 6, rng);
    int top = 0;
    for (VertexSet m : k.maximal_faces()) top = std::max(top, vcount(m) - 1);
    for (int d = 1; d <= top; ++d) CHECK((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());
    for (int d = 0; d <= top; ++d) CHECK(smith_normal_form(boundary_matrix(k, d)).rank ==
                                         support::rational_rank(boundary_matrix(k, d)));
    auto h = reduced_homology(k);
    long long faces = 0, betti = 0;
    for (int d = -1; d <= top; ++d) {
      long long sign = (d + 1) % 2 == 0 ? 1 : -1;
      faces += sign * static_cast<long long>(k.faces(d).size());
      betti += sign * static_cast<long long>(h.betti(d));
    }
    CHECK(faces == betti);
    auto q = cohomology_dims(h), p = cohomology_dims(h, 2);
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(q[i] <= p[i]);
  }
}
