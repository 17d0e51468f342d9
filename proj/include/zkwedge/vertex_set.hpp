#pragma once
// Subsets of [n] as 64-bit masks; vertex v lives in bit v-1.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace zkw {

using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << (v - 1); }

// {1..n}
constexpr VertexSet vrange(int n) { return n >= 64 ? ~VertexSet{0} : (vbit(n + 1) - 1); }

constexpr int vcount(VertexSet s) { return std::popcount(s); }

constexpr bool vsubset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// Smallest vertex label, 0 for the empty set.
constexpr int vmin(VertexSet s) { return s ? std::countr_zero(s) + 1 : 0; }

constexpr int vmax(VertexSet s) { return s ? 64 - std::countl_zero(s) : 0; }

inline std::vector<int> vlist(VertexSet s) {
  std::vector<int> out;
  out.reserve(vcount(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

template <class Range>
VertexSet vfrom(const Range& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= vbit(v);
  return s;
}

/// Left-lexicographic order on increasing sequences, a proper prefix first.
inline bool vlex_less(VertexSet a, VertexSet b) {
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

/// Order by size, ties broken left-lexicographically.
inline bool vsize_lex_less(VertexSet a, VertexSet b) {
  int ca = vcount(a), cb = vcount(b);
  return ca != cb ? ca < cb : vlex_less(a, b);
}

// Calls f(U) for every subset U of s, the empty set included.
template <class F>
void for_each_subset(VertexSet s, F&& f) {
  VertexSet u = 0;
  while (true) {
    f(u);
    if (u == s) break;
    u = (u - s) & s;
  }
}

/// "{1,2,3}" style rendering.
inline std::string vformat(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : vlist(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace zkw
