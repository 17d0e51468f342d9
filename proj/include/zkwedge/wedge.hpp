#pragma once
// Wedges of summands Sigma^s (smash of OmegaX_i, i in I) and their sphere realizations.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zkwedge/vertex_set.hpp"

namespace zkw {

struct Summand {
  int suspension = 1;
  VertexSet index = 0;

  bool operator==(const Summand&) const = default;
};

/// Summands ordered by |I|, then I left-lexicographically, then suspension.
struct SummandLess {
  bool operator()(const Summand& a, const Summand& b) const {
    if (a.index != b.index) return vsize_lex_less(a.index, b.index);
    return a.suspension < b.suspension;
  }
};

class SphereWedge {
 public:
  void add(int dim, std::uint64_t count = 1);
  const std::map<int, std::uint64_t>& dims() const { return dims_; }
  std::uint64_t total() const;
  bool empty() const { return dims_.empty(); }
  /// Coefficient list of sum count * t^dim.
  std::vector<std::uint64_t> poincare() const;
  /// "S^3 x3, S^4 x2"; "point" when empty.
  std::string format() const;

  bool operator==(const SphereWedge&) const = default;

 private:
  std::map<int, std::uint64_t> dims_;
};

class SymbolicWedge {
 public:
  using Map = std::map<Summand, std::uint64_t, SummandLess>;

  SymbolicWedge() = default;

  /// Requires s >= 1 and I nonempty.
  void add(int suspension, VertexSet index, std::uint64_t mult = 1);
  void add(const SymbolicWedge& other);

  const Map& summands() const { return summands_; }
  std::uint64_t multiplicity(int suspension, VertexSet index) const;
  std::uint64_t total() const;
  bool empty() const { return summands_.empty(); }
  VertexSet support() const;

  bool contains(const SymbolicWedge& sub) const;
  /// Multiset difference; throws unless `sub` is contained.
  SymbolicWedge minus(const SymbolicWedge& sub) const;

  /// Renames indices through `map` (indexed by old label).
  SymbolicWedge relabel(const std::vector<int>& map) const;

  std::string format() const;

  bool operator==(const SymbolicWedge& other) const { return summands_ == other.summands_; }

 private:
  Map summands_;
};

/// Each (s, I, mult) contributes mult copies of S^(s + loop_dim * |I|).
SphereWedge realize(const SymbolicWedge& w, int loop_dim = 1);

SymbolicWedge wedge(const SymbolicWedge& a, const SymbolicWedge& b);
SymbolicWedge suspend(const SymbolicWedge& w, int k);
/// Needs disjoint supports; (s1, I1) ^ (s2, I2) = (s1 + s2, I1 u I2).
SymbolicWedge smash(const SymbolicWedge& a, const SymbolicWedge& b);
SymbolicWedge join(const SymbolicWedge& a, const SymbolicWedge& b);
/// OmegaX_v * W: every (s, I) becomes (s + 1, I u {v}).
SymbolicWedge join_loop(const SymbolicWedge& w, int v);

/// W ^ (product of OmegaX_j, j in J), split over nonempty U in J.
SymbolicWedge smash_with_torus(const SymbolicWedge& w, VertexSet j);
SymbolicWedge half_smash_right(const SymbolicWedge& w, VertexSet j);
SymbolicWedge half_smash_left(VertexSet j, const SymbolicWedge& w);
/// Sum over nonempty U in J1, V in J2 of (1, U u V).
SymbolicWedge torus_join_torus(VertexSet j1, VertexSet j2);

/// Homotopy fibre of the inclusion of the (n-k)-vertex skeleton coordinate subspaces.
SymbolicWedge skeleton_fibre(int n, int k);

/// Sphere-level counterparts used when index data is unavailable.
SphereWedge wedge(const SphereWedge& a, const SphereWedge& b);
SphereWedge smash(const SphereWedge& a, const SphereWedge& b);
SphereWedge half_smash_torus(const SphereWedge& w, int torus_rank);

std::uint64_t binomial(int n, int k);

}  // namespace zkw
