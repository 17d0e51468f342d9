#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zkwedge/error.hpp"
#include "zkwedge/hochster.hpp"
#include "zkwedge/series.hpp"

using namespace zkw;
using support::complex_of;

namespace {

IntPolynomial P(std::initializer_list<int> c) { return IntPolynomial(std::vector<Integer>(c.begin(), c.end())); }

std::vector<Integer> ints(std::initializer_list<int> c) { return std::vector<Integer>(c.begin(), c.end()); }

}  // namespace

TEST_CASE("rational function basics") {
  CHECK(RationalFunction(P({0, 1}), P({0, 1})) == RationalFunction::polynomial(P({1})));
  auto geo = RationalFunction(P({1}), P({1, -1}));
  CHECK(geo * RationalFunction::polynomial(P({1, -1})) == RationalFunction::polynomial(P({1})));
  CHECK(RationalFunction(P({2, 2}), P({4})) == RationalFunction(P({1, 1}), P({2})));
  CHECK(RationalFunction(P({1}), P({-1, 1})).denominator() == P({1, -1}));
  CHECK_THROWS_AS(RationalFunction(P({1}), P({})), Error);
  CHECK_THROWS_AS(geo / RationalFunction(), Error);
}

TEST_CASE("series expansion") {
  auto r = RationalFunction(IntPolynomial::one_plus_t_pow(3), P({1, 0, -3, -2}));
  auto s = r.series(4);
  CHECK(s == ints({1, 3, 6, 12, 24}));
  CHECK(support::series_times_denominator_matches(r.series(12), r.numerator().coeffs(), r.denominator().coeffs()));
  CHECK_THROWS_AS(RationalFunction(P({1}), P({2, 1})).series(3), Error);
}

TEST_CASE("face ring Poincare series") {
  for (unsigned n = 0; n <= 10; ++n) CHECK(face_ring_poincare(n, IntPolynomial()) == serre_series(n));
  auto three = face_ring_poincare(3, P({0, 0, 0, 3, 2}));
  CHECK(three == RationalFunction(IntPolynomial::one_plus_t_pow(3), P({1, 0, -3, -2})));
  CHECK(three.series(6) == ints({1, 3, 6, 12, 24, 48, 96}));
  auto two = face_ring_poincare(2, P({0, 0, 0, 1}));
  CHECK(two == RationalFunction(P({1, 1}), P({1, -1})));
  CHECK(two.series(5) == ints({1, 2, 2, 2, 2, 2}));
  CHECK_THROWS_AS(face_ring_poincare(3, P({0, 1})), Error);
}

TEST_CASE("classical closed forms") {
  CHECK(serre_series(3) == RationalFunction::polynomial(P({1, 3, 3, 1})));
  CHECK(tate_series(2, 1) == RationalFunction(P({1, 1}), P({1, -1})));
  CHECK(golod_series(3, ints({3, 2, 0})) == face_ring_poincare(3, P({0, 0, 0, 3, 2})));
}

TEST_CASE("golod verdicts") {
  auto v = golod_verdict(SimplicialComplex::skeleton(5, 3), false);
  CHECK(v.status == GolodStatus::Golod);
  CHECK(v.reason == GolodReason::Shifted);
  auto glued = complex_of(4, {{1, 2, 3}, {2, 3, 4}});
  CHECK(golod_verdict(glued, true).status == GolodStatus::Golod);
  auto cyc = complex_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(golod_verdict(cyc, false).status == GolodStatus::Unknown);
  CHECK(golod_verdict(cyc, false).reason == GolodReason::None);
}

TEST_CASE("ring axioms on random rational functions") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-4, 4), deg(0, 3);
  auto rnd_poly = [&](bool nonzero) {
    while (true) {
      std::vector<Integer> v(deg(rng) + 1);
      for (auto& x : v) x = c(rng);
      IntPolynomial p(v);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  auto rnd = [&] { return RationalFunction(rnd_poly(false), rnd_poly(true)); };
  for (int i = 0; i < 60; ++i) {
    auto a = rnd(), b = rnd(), d = rnd();
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a + b == b + a);
    CHECK(a - a == RationalFunction());
    if (!b.numerator().is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("series of golod-certified complexes start with 1, n and stay nonnegative") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    int n = 3 + i % 5;
    auto k = support::random_shifted(n, rng);
    auto p = bigraded_betti(k).poincare();
    auto r = face_ring_poincare(n, IntPolynomial(std::vector<Integer>(p.begin(), p.end())));
    auto s = r.series(10);
    CHECK(s[0] == 1);
    CHECK(s[1] == n);
    for (const auto& x : s) CHECK(x >= 0);
  }
}
