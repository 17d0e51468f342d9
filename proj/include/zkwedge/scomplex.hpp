#pragma once
// Finite abstract simplicial complexes on labelled vertices.

#include <memory>
#include <optional>
#include <vector>

#include "zkwedge/vertex_set.hpp"

namespace zkw {

/// Vertex order plus the (sigma, v, v') triple that breaks shiftedness, if any.
struct ShiftVerdict {
  bool shifted = false;
  std::vector<int> order;  // order[i] is the vertex placed at position i+1
  VertexSet face = 0;      // sigma
  int vertex = 0;          // v in sigma
  int replacement = 0;     // v', (sigma - v) + v' is not a face
};

enum class ShiftMode { GivenOrder, Search };

enum class SubcomplexKind { Link, Star, Rest, Full };

enum class CombineKind { DisjointUnion, Glue, Join };

class SimplicialComplex {
 public:
  /// The complex {empty face} on no vertices.
  SimplicialComplex();

  /// Downward closure of `faces`; every entry must lie in [1, n].
  static SimplicialComplex construct(int n, const std::vector<std::vector<int>>& faces);

  /// Downward closure of `generators` on an arbitrary ground set.
  static SimplicialComplex from_generators(VertexSet ground, std::vector<VertexSet> generators);

  /// All subsets of [n] with at most q vertices.
  static SimplicialComplex skeleton(int n, int q);

  VertexSet ground() const { return ground_; }
  /// Largest label of the ground set; the `n` of [n] for complexes built by construct.
  int n() const { return vmax(ground_); }
  int vertex_count() const { return vcount(ground_); }
  const std::vector<VertexSet>& maximal_faces() const { return maximal_; }
  /// Ground vertices that are not faces.
  VertexSet ghosts() const;

  bool contains(VertexSet face) const;

  /// Every face, sorted left-lexicographically (the empty face first).
  const std::vector<VertexSet>& faces() const;
  std::vector<VertexSet> faces(int dim) const;
  std::size_t face_count() const { return faces().size(); }

  SimplicialComplex link(VertexSet face) const;
  SimplicialComplex star(VertexSet face) const;
  /// Faces inside `keep`, on ground `keep`. rest{2..n} in the usual notation.
  SimplicialComplex rest(VertexSet keep) const;
  SimplicialComplex full(VertexSet sigma) const;
  SimplicialComplex subcomplex(SubcomplexKind kind, VertexSet arg) const;

  ShiftVerdict is_shifted(ShiftMode mode = ShiftMode::GivenOrder) const;

  /// Renames order[i] to i+1; `order` must list the ground set exactly once.
  SimplicialComplex relabel(const std::vector<int>& order) const;

  bool operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && maximal_ == other.maximal_;
  }

 private:
  struct Closure;

  SimplicialComplex(VertexSet ground, std::vector<VertexSet> maximal);

  VertexSet ground_ = 0;
  std::vector<VertexSet> maximal_;  // never empty; {0} for the complex {empty face}
  std::shared_ptr<Closure> closure_;
};

/// Vertex maps used by glue: K1 outside sigma -> 1..l, sigma -> l+1..m, K2 outside sigma -> m+1..n.
struct GlueLayout {
  std::vector<int> map1;  // map1[v] = new label of vertex v of K1 (0 if not in ground)
  std::vector<int> map2;
  VertexSet left_only = 0;
  VertexSet shared = 0;
  VertexSet right_only = 0;
};

/// face1[i] is identified with face2[i]. Both must be faces of equal size.
GlueLayout glue_layout(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::vector<int>& face1, const std::vector<int>& face2);

/// K1 keeps 1..m, K2 moves to m+1..m+m2 where m = K1.n().
GlueLayout join_layout(const SimplicialComplex& k1, const SimplicialComplex& k2);

SimplicialComplex combine(CombineKind kind, const SimplicialComplex& k1, const SimplicialComplex& k2,
                          const std::vector<int>& face1 = {}, const std::vector<int>& face2 = {});

/// Apply a vertex map (indexed by old label) to a vertex set.
VertexSet map_vertices(VertexSet s, const std::vector<int>& map);

}  // namespace zkw
