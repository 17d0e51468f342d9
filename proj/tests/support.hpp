#pragma once
// Generators and reference computations shared by the unit and acceptance tests.
// Nothing here calls into the decomposer; the rank and determinant routines avoid the SNF.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "zkwedge/scomplex.hpp"
#include "zkwedge/wedge.hpp"
#include "zkwedge/zhomology.hpp"

namespace support {

using zkw::SimplicialComplex;
using zkw::VertexSet;
using Rational = boost::multiprecision::cpp_rational;

inline SimplicialComplex complex_of(int n, std::initializer_list<std::vector<int>> faces) {
  return SimplicialComplex::construct(n, std::vector<std::vector<int>>(faces));
}

/// Smallest shifted complex on [n] containing the generators.
inline SimplicialComplex shifted_closure(int n, const std::vector<VertexSet>& gens) {
  std::set<VertexSet> seen;
  std::vector<VertexSet> todo(gens.begin(), gens.end());
  while (!todo.empty()) {
    VertexSet s = todo.back();
    todo.pop_back();
    if (!seen.insert(s).second) continue;
    for (int v : zkw::vlist(s)) {
      todo.push_back(s & ~zkw::vbit(v));
      if (v > 1 && !(s & zkw::vbit(v - 1))) todo.push_back((s & ~zkw::vbit(v)) | zkw::vbit(v - 1));
    }
  }
  return SimplicialComplex::from_generators(zkw::vrange(n), std::vector<VertexSet>(seen.begin(), seen.end()));
}

/// Random shifted complex on [n] with every vertex present.
template <class Rng>
SimplicialComplex random_shifted(int n, Rng& rng) {
  std::uniform_int_distribution<int> count(1, 4), size(1, std::max(1, n - 1));
  std::uniform_int_distribution<int> vert(1, n);
  std::vector<VertexSet> gens{zkw::vbit(n)};
  int c = count(rng);
  for (int i = 0; i < c; ++i) {
    int s = size(rng);
    VertexSet g = 0;
    while (zkw::vcount(g) < s) g |= zkw::vbit(vert(rng));
    gens.push_back(g);
  }
  return shifted_closure(n, gens);
}

/// Random complex on [n] (not necessarily shifted); some vertices may be ghosts.
template <class Rng>
SimplicialComplex random_complex(int n, Rng& rng) {
  std::uniform_int_distribution<int> count(1, 6), size(1, n), vert(1, n);
  std::vector<VertexSet> gens;
  int c = count(rng);
  for (int i = 0; i < c; ++i) {
    int s = size(rng);
    VertexSet g = 0;
    while (zkw::vcount(g) < s) g |= zkw::vbit(vert(rng));
    gens.push_back(g);
  }
  return SimplicialComplex::from_generators(zkw::vrange(n), gens);
}

/// Every shifted complex on [n] (identity order) in which all n vertices are faces.
inline std::vector<SimplicialComplex> all_shifted(int n) {
  std::vector<VertexSet> subsets;
  for (VertexSet s = 1; s <= zkw::vrange(n); ++s) subsets.push_back(s);
  auto weight = [](VertexSet s) {
    int w = 0;
    for (int v : zkw::vlist(s)) w += v;
    return w;
  };
  // Predecessors in the shifted order come earlier: fewer vertices, or equal size and smaller sum.
  std::sort(subsets.begin(), subsets.end(), [&](VertexSet a, VertexSet b) {
    int ca = zkw::vcount(a), cb = zkw::vcount(b);
    if (ca != cb) return ca < cb;
    return weight(a) != weight(b) ? weight(a) < weight(b) : a < b;
  });
  std::vector<SimplicialComplex> out;
  std::set<VertexSet> chosen{0};
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == subsets.size()) {
      if (chosen.count(zkw::vbit(n)))
        out.push_back(SimplicialComplex::from_generators(zkw::vrange(n), std::vector<VertexSet>(chosen.begin(), chosen.end())));
      return;
    }
    VertexSet s = subsets[i];
    bool allowed = true;
    for (int v : zkw::vlist(s)) {
      if (!chosen.count(s & ~zkw::vbit(v))) allowed = false;
      if (v > 1 && !(s & zkw::vbit(v - 1)) && !chosen.count((s & ~zkw::vbit(v)) | zkw::vbit(v - 1))) allowed = false;
    }
    walk(i + 1);
    if (allowed) {
      chosen.insert(s);
      walk(i + 1);
      chosen.erase(s);
    }
  };
  walk(0);
  return out;
}

/// sum over j of C(n,j) C(j-1,n-k) spheres S^(n-k+j).
inline zkw::SphereWedge skeleton_sphere_counts(int n, int k) {
  zkw::SphereWedge out;
  for (int j = n - k + 1; j <= n; ++j) out.add(n - k + j, zkw::binomial(n, j) * zkw::binomial(j - 1, n - k));
  return out;
}

/// Rank over Q by fraction Gaussian elimination.
inline std::size_t rational_rank(const zkw::IntegerMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = Rational(a.at(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Determinant by cofactor-free Bareiss elimination.
inline zkw::Integer determinant(const zkw::IntegerMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<zkw::Integer>> m(n, std::vector<zkw::Integer>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a.at(r, c);
  zkw::Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? zkw::Integer(1) : sign * m[n - 1][n - 1];
}

/// Power-series coefficients of num/den checked by multiplying back: returns true if series*den == num mod t^(order+1).
inline bool series_times_denominator_matches(const std::vector<zkw::Integer>& series, const std::vector<zkw::Integer>& num,
                                             const std::vector<zkw::Integer>& den) {
  for (std::size_t i = 0; i < series.size(); ++i) {
    zkw::Integer acc = 0;
    for (std::size_t j = 0; j <= i && j < den.size(); ++j) acc += den[j] * series[i - j];
    zkw::Integer expect = i < num.size() ? num[i] : zkw::Integer(0);
    if (acc != expect) return false;
  }
  return true;
}

}  // namespace support
